from SturmLiouville.Algebra.Polynomial import Polynomial, MINUS_INFINITY, poly_arith, differentiate, evaluate, to_fraction
from SturmLiouville.Algebra.RationalFunction import RationalFunction, PartialFractions, PoleTerm, partial_fractions
