from SturmLiouville.Bochner.Interval import Interval, INFINITY
from SturmLiouville.Bochner.Classification import AffineMap, Canonical, CaseTag, Mode, ParamConstraint, \
    ClassificationRecord, normalize, classify, jacobi_admissible, transform_operator
