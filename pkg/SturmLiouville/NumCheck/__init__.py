from SturmLiouville.NumCheck.Quadrature import QuadResult, BoundaryTrend, CrossValidation, quad_inner_product, \
    boundary_limit, cross_validate
