from .cyclotomic import (
    CycNum,
    cyc_arith,
    imaginary_unit,
    i_sqrt3,
    sqrt2,
    sqrt3,
    sqrt5,
)
from .mpoly import MPoly, PolyRing, poly_exact_div
from .ratfn import RatFn, as_ratfn
from .matrix import MatrixR, inverse, mat_adjugate_det, to_poly_matrix, to_ratfn_matrix
from .linsolve import LinearSolution, linsolve
from .roots import univariate_common_roots
