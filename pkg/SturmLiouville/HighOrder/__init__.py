from SturmLiouville.HighOrder.HighOrderSystem import HighOrderSystem, BoundaryExpression, BoundaryWitness, Linkage, \
    PRINTED_EIGENVALUE, derive_order3, derive_order4, complete_order3, complete_order4, \
    boundary_expression, boundary_difference_vanishes, example_order4, order4_family
