"""Almost duality between Saito and almost Saito structures."""

import logging

from .connection import natural_connection
from .exactalg import CycNum, inverse, to_ratfn_matrix
from .exceptions import DivisionByZero, NotRegular, SingularP, SingularTwist
from .saito import check_ass
from .structures import (
    AlmostSaitoData,
    SaitoData,
    contract,
    euler_vector,
    identity_matrix,
    jacobian_of,
)

NATURAL = "Natural"
FAILS_ASS1 = "FailsASS1"
FAILS_ASS2 = "FailsASS2"
NOT_REGULAR = "NotRegular"


def _invert(matrix, error):
    try:
        return inverse(matrix)
    except DivisionByZero:
        raise error from None


def dual_almost(S, value=0, r=None):
    """The almost Saito structure on the complement of det(E.C - value I) = 0.

    B_alpha = C_alpha (E.C - value I)^-1,
    Omega_alpha = Gamma_alpha + (r I - W - E.Gamma) B_alpha,
    with unit E - value e.
    """
    value = CycNum.coerce(value)
    if r is None:
        r = CycNum.rational(1) / S.ring.weights[0]
    r = CycNum.coerce(r)
    ring = S.ring
    n = S.n
    identity = identity_matrix(ring, n)
    twist = S.discriminant_matrix() - identity * value
    twist_inverse = _invert(twist, SingularTwist(value))
    mult = [C * twist_inverse for C in S.mult]
    correction = identity * r - S.W - contract(S.E, S.gamma)
    omega = [G + correction * B for G, B in zip(S.gamma, mult)]
    unit = [a - b * value for a, b in zip(S.E, S.e)]
    return AlmostSaitoData(ring, omega, mult, unit, S.e, r, group=S.group)


def dual_saito(A):
    """C_alpha = B_alpha (e.B)^-1 and Gamma_alpha = Omega_alpha - (Q + e.Omega) C_alpha."""
    e_B = contract(A.e, A.mult)
    e_B_inverse = _invert(e_B, SingularP())
    mult = [B * e_B_inverse for B in A.mult]
    twist = A.twist()
    gamma = [omega - twist * C for omega, C in zip(A.omega, mult)]
    return SaitoData(A.ring, gamma, mult, A.E, A.e, group=A.group)


def regular_mult(omega, e):
    """The multiplication forced by a regular pair (Omega, e).

    B_alpha = -(Q + e.Omega)^-1 (d_alpha (Q + e.Omega) + [Omega_alpha, Q + e.Omega]).
    """
    n = len(omega)
    Q = jacobian_of(e)
    twist = Q + contract(e, omega)
    twist_inverse = _invert(twist, NotRegular(e))
    return [
        -(twist_inverse * (twist.diff(alpha) + omega[alpha].commutator(twist)))
        for alpha in range(n)
    ]


def family_shift(A, value, nu):
    """The almost Saito structure with multiplication (E - value e)*^-1 composed
    with * and connection Omega + nu B' + value (Q + e.Omega) B'; its
    parameter is r + nu."""
    value = CycNum.coerce(value)
    nu = CycNum.coerce(nu)
    unit = [a - b * value for a, b in zip(A.E, A.e)]
    twist = contract(unit, A.mult)
    twist_inverse = _invert(twist, SingularTwist(value))
    mult = [twist_inverse * B for B in A.mult]
    nabla_e = A.twist()
    omega = [
        O + B * nu + nabla_e * B * value for O, B in zip(A.omega, mult)
    ]
    return AlmostSaitoData(A.ring, omega, mult, unit, A.e, A.r + nu, group=A.group)


def natural_almost(group, e, family=None):
    """(nabla^V, *, e) with E = E_deg / d_1 and r = 1 / d_1, the
    multiplication being the one forced by regularity."""
    if family is None:
        family = natural_connection(group)
    omega = family.omegas()
    mult = regular_mult(omega, e)
    ring = family.ring
    return AlmostSaitoData(
        ring,
        omega,
        mult,
        euler_vector(ring),
        e,
        CycNum.rational(1) / group.d1,
        group=group,
    )


class Verdict(object):
    """Outcome of natural_ass_test.

    Attributes:
        name: Natural, FailsASS1, FailsASS2 or NotRegular
        residual: a nonzero residual entry witnessing the failure
        report: the ResidualReport of the candidate structure
    """

    def __init__(self, name, residual=None, report=None):
        self.name = name
        self.residual = residual
        self.report = report

    @property
    def is_natural(self):
        return self.name == NATURAL

    def __eq__(self, other):
        if isinstance(other, str):
            return self.name == other
        if isinstance(other, Verdict):
            return self.name == other.name
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"<Verdict {self.name}>"

    def __str__(self):
        return self.name

    @property
    def data(self):
        return {
            "verdict": self.name,
            "residual": str(self.residual) if self.residual is not None else None,
            "report": self.report.serializable_data() if self.report is not None else None,
        }

    def serializable_data(self):
        return self.data


def natural_ass_test(group, e, family=None, enable_logging=False):
    """Test whether (nabla^V, e) carries a natural almost Saito structure."""
    try:
        A = natural_almost(group, e, family)
    except NotRegular:
        return Verdict(NOT_REGULAR)
    report = check_ass(A)
    for family_name, verdict in (("ass1", FAILS_ASS1), ("ass2", FAILS_ASS2)):
        if not report.family_is_zero(family_name):
            _, _, value = report.first_nonzero(family_name)
            if enable_logging:
                logging.info("%s with e = %s: %s", group.name, [str(v) for v in e], verdict)
            return Verdict(verdict, value, report)
    if enable_logging:
        logging.info("%s with e = %s: %s", group.name, [str(v) for v in e], NATURAL)
    return Verdict(NATURAL, None, report)


def euler_consistency(A):
    """(Q + e.Omega) E - (r - 1) e, which vanishes for a regular structure."""
    image = A.twist().apply(A.E)
    return [a - b * (A.r - 1) for a, b in zip(image, A.e)]


def bi_flat_residual(S, A):
    """Omega_alpha - Gamma_alpha - (r I - W - E.Gamma) B_alpha."""
    identity = identity_matrix(S.ring, S.n)
    correction = identity * A.r - S.W - contract(S.E, S.gamma)
    return [
        to_ratfn_matrix(O, S.ring) - G - correction * B
        for O, G, B in zip(A.omega, S.gamma, A.mult)
    ]
