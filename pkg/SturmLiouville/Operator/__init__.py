from SturmLiouville.Operator.DiffOperator import DiffOperator, EigenvalueFormula, EigenPair, apply, matrix_on_Pn, \
    eigenvalue_formula, monic_eigenpolynomial
