from SturmLiouville.Weight.WeightForm import WeightForm, Finiteness, FinitenessTag, Side, Direction, derive_weight, \
    finiteness_at_point, decay_dominates_polynomials
from SturmLiouville.Weight.SingularPoint import SingularPointData, order1_singular_classify
