from SturmLiouville.Verify.Moments import MomentRecurrence, MomentTable, GramMatrix, moment_recurrence, moments_upto, \
    inner_product, gram_matrix, norm_finiteness
from SturmLiouville.Verify.SymbolicOracle import jacobi_moment_ratio, laguerre_moment_ratio, hermite_moment_ratio
