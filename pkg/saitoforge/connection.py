"""The natural flat connection on the orbit space in the invariant frame.

The trivial connection of V descends to a torsion free flat connection on
the space of orbits. In the frame of basic invariants its Christoffel
symbols have the single denominator Delta, so the family is stored as
polynomial matrices P_alpha with Omega_alpha = P_alpha / Delta.
"""

import logging

from .exactalg import CycNum, MatrixR, MPoly, RatFn
from .exceptions import FlatnessViolation, NotDivisible, ParseError, PropertyViolation
from .groups import invariant_reduce

POLYNOMIAL_OMEGA = "Delta Omega polynomial"
CONSTANT_DETERMINANT = "Delta det Omega"
POLYNOMIAL_INVERSE = "Omega inverse polynomial"
POLYNOMIAL_QUOTIENT = "Omega inverse product polynomial"
POLYNOMIAL_LIFT = "lift polynomial"


class OmegaFamily(object):
    """Connection matrices Omega_alpha = P_alpha / Delta of a group.

    ``P[alpha][gamma, beta]`` is Delta times Omega^gamma_{alpha beta}.
    """

    def __init__(self, group, P):
        self.group = group
        self.P = list(P)

    @property
    def ring(self):
        return self.group.x_ring

    @property
    def delta(self):
        return self.group.discriminant_x

    @property
    def n(self):
        return self.group.rank

    def omega(self, alpha):
        delta = self.delta
        return self.P[alpha].map(lambda v: RatFn(v, delta))

    def omegas(self):
        return [self.omega(alpha) for alpha in range(self.n)]

    def expected_degree(self, gamma, alpha, beta):
        d = self.group.degrees
        return d[gamma] - d[alpha] - d[beta] + self.delta.weighted_degree()

    def degree_violations(self):
        """Entries whose weighted degree or homogeneity is wrong."""
        violations = []
        for alpha, matrix in enumerate(self.P):
            for gamma, beta, value in matrix.entries():
                if value.is_zero():
                    continue
                expected = self.expected_degree(gamma, alpha, beta)
                if not value.is_homogeneous() or value.weighted_degree() != expected:
                    violations.append((gamma, alpha, beta))
        return violations

    def symmetry_violations(self):
        violations = []
        for alpha in range(self.n):
            for beta in range(alpha + 1, self.n):
                for gamma in range(self.n):
                    if self.P[alpha][gamma, beta] != self.P[beta][gamma, alpha]:
                        violations.append((gamma, alpha, beta))
        return violations

    def __repr__(self):
        return f"<OmegaFamily {self.group.name}>"

    @property
    def data(self):
        return {
            "group": self.group.name,
            "Delta": self.delta.serializable_data(),
            "P": [m.serializable_data() for m in self.P],
        }

    def serializable_data(self):
        return self.data

    @classmethod
    def from_data(cls, data, group):
        ring = group.x_ring
        try:
            P = [MatrixR.from_data(m, lambda v: MPoly.from_data(ring, v)) for m in data["P"]]
        except (KeyError, TypeError) as error:
            raise ParseError(data, "as a connection family") from error
        return cls(group, P)


def natural_connection(group, verify=True, enable_logging=False):
    """Delta * Omega^gamma_{alpha beta} for the basic invariants of ``group``.

    With J[alpha, i] = dx^alpha/du^i, the inverse Jacobian is adj(J)/det J
    and

        Omega^gamma_{alpha beta}(x(u)) = - sum_ij (du^i/dx^alpha)
            (du^j/dx^beta) d^2 x^gamma / du^i du^j.

    Multiplying by delta = Delta(x(u)) gives a polynomial in u after exact
    division by (det J)^2, which is then rewritten in the invariants.
    """
    n = group.rank
    adjugate, det = group.jacobian().adjugate_det()
    det_squared = det * det
    delta = group.discriminant_u
    x_zero = group.x_ring.zero
    entries = [[[x_zero] * n for _ in range(n)] for _ in range(n)]
    for gamma in range(n):
        contracted = adjugate.transpose() * group.hessian(gamma) * adjugate
        for alpha in range(n):
            for beta in range(alpha, n):
                numerator = -(delta * contracted[alpha, beta])
                value = invariant_reduce(numerator.exact_div(det_squared), group)
                entries[alpha][gamma][beta] = value
                entries[beta][gamma][alpha] = value
    family = OmegaFamily(group, [MatrixR(rows) for rows in entries])
    if enable_logging:
        logging.info("Natural connection of %s computed", group.name)
    if verify:
        alpha, beta = first_flatness_failure(family)
        if alpha is not None:
            raise FlatnessViolation(group.name, alpha, beta)
        if not euler_identity_residual(family).is_zero():
            raise PropertyViolation("EOmega", f"for {group.name}")
        if enable_logging:
            logging.info("Flatness of the connection of %s verified", group.name)
    return family


def flatness_residual(family, alpha, beta):
    """Delta^2 times d_a Omega_b - d_b Omega_a + [Omega_a, Omega_b]."""
    delta = family.delta
    P_a, P_b = family.P[alpha], family.P[beta]
    derivative = P_b.diff(alpha) - P_a.diff(beta)
    correction = P_b * delta.diff(alpha) - P_a * delta.diff(beta)
    return derivative * delta - correction + P_a.commutator(P_b)


def first_flatness_failure(family):
    for alpha in range(family.n):
        for beta in range(alpha + 1, family.n):
            if not flatness_residual(family, alpha, beta).is_zero():
                return alpha, beta
    return None, None


def euler_identity_residual(family):
    """sum_alpha d_alpha x^alpha P_alpha - Delta diag(1 - d_gamma)."""
    ring = family.ring
    total = MatrixR.zeros(family.n, ring.zero)
    for alpha, (x, d) in enumerate(zip(ring.gens(), family.group.degrees)):
        total = total + family.P[alpha] * (x * d)
    expected = MatrixR.diagonal(
        [family.delta * (1 - d) for d in family.group.degrees], ring.zero
    )
    return total - expected


class PoleOrderReport(object):
    """Outcome of check_pole_orders.

    Attributes:
        items: list of (item, alpha, detail) for every property checked
        constants: alpha -> the constant Delta * det Omega_alpha where it is one
    """

    def __init__(self, group):
        self.group = group
        self.items = []
        self.constants = {}

    def record(self, item, alpha, detail="pass"):
        self.items.append((item, alpha, detail))

    def __repr__(self):
        return f"<PoleOrderReport {self.group.name}: {len(self.items)} items>"

    @property
    def data(self):
        return {
            "group": self.group.name,
            "items": [
                {"item": item, "alpha": alpha, "detail": str(detail)}
                for item, alpha, detail in self.items
            ],
            "constants": {
                str(alpha): value.serializable_data()
                for alpha, value in sorted(self.constants.items())
            },
        }

    def serializable_data(self):
        return self.data


def _divide(item, alpha, numerator, denominator):
    try:
        return numerator.exact_div(denominator)
    except NotDivisible:
        raise PropertyViolation(item, f"for alpha = {alpha + 1}") from None


def check_pole_orders(family):
    """Pole-order properties of Omega, each certified by exact division.

    Delta Omega_alpha is polynomial; Delta det Omega_alpha is polynomial and
    constant when deg delta = n d_alpha. For such mu with det Omega_mu != 0,
    Omega_mu^-1 and Omega_mu^-1 Omega_alpha are polynomial, and so is
    J^-1 Omega_mu^-1 in u.
    """
    group = family.group
    n = family.n
    delta = family.delta
    delta_degree = delta.weighted_degree()
    report = PoleOrderReport(group)
    for alpha in range(n):
        report.record(POLYNOMIAL_OMEGA, alpha)

    regular = []
    for alpha in range(n):
        det = family.P[alpha].det()
        value = _divide(CONSTANT_DETERMINANT, alpha, det, delta ** (n - 1))
        if delta_degree == n * group.degrees[alpha]:
            if not value.is_constant():
                raise PropertyViolation(CONSTANT_DETERMINANT, f"(Delta det Omega_{alpha + 1} = {value})")
            report.constants[alpha] = value.constant_value()
            if not value.is_zero():
                regular.append((alpha, det))
        report.record(CONSTANT_DETERMINANT, alpha, value)

    jacobian_adjugate, jacobian_det = group.jacobian().adjugate_det()
    for mu, det in regular:
        adjugate = family.P[mu].adjugate()
        reduced = adjugate.map(lambda v: _divide(POLYNOMIAL_INVERSE, mu, v, delta ** (n - 2)))
        report.record(POLYNOMIAL_INVERSE, mu)
        for alpha in range(n):
            product = adjugate * family.P[alpha]
            product.map(lambda v: _divide(POLYNOMIAL_QUOTIENT, alpha, v, det))
        report.record(POLYNOMIAL_QUOTIENT, mu)
        # Omega_mu^-1 = reduced / c with det P_mu = c Delta^(n-1)
        scale = report.constants[mu].inverse()
        lifted = reduced.map(lambda v: v.compose(group.invariants) * scale)
        (jacobian_adjugate * lifted).map(
            lambda v: _divide(POLYNOMIAL_LIFT, mu, v, jacobian_det)
        )
        report.record(POLYNOMIAL_LIFT, mu)
    return report


def leading_block_determinant(group):
    """prod_gamma (1 - d_gamma) / d_1."""
    value = CycNum.rational(1)
    for d in group.degrees:
        value = value * CycNum.rational(1 - d) / group.d1
    return value
