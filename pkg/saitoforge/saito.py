"""Natural polynomial Saito structures and the axiom checks in matrix form."""

import logging

from .connection import leading_block_determinant, natural_connection
from .exactalg import CycNum, MatrixR, inverse
from .exactalg.matrix import is_zero
from .exceptions import AssumptionViolated, DivisionByZero, PropertyViolation
from .structures import (
    ExpansionData,
    SaitoData,
    contract,
    coordinate_field,
    derivative_along,
    euler_vector,
    identity_matrix,
)


class ResidualReport(object):
    """Residuals of a family of identities, grouped by name.

    Each residual is a matrix or a list of entries; the structure satisfies
    the identities exactly when every residual is identically zero.
    """

    def __init__(self, subject=None):
        self.subject = subject
        self.families = {}

    def add(self, family, label, residual):
        self.families.setdefault(family, []).append((label, residual))

    @staticmethod
    def values(residual):
        if isinstance(residual, MatrixR):
            return [value for _, _, value in residual.entries()]
        return list(residual)

    @classmethod
    def residual_is_zero(cls, residual):
        return all(is_zero(v) for v in cls.values(residual))

    def failures(self):
        return [
            (family, label)
            for family, residuals in self.families.items()
            for label, residual in residuals
            if not self.residual_is_zero(residual)
        ]

    def family_is_zero(self, family):
        return all(
            self.residual_is_zero(residual) for _, residual in self.families.get(family, [])
        )

    def is_zero(self):
        return not self.failures()

    def __bool__(self):
        return self.is_zero()

    def first_nonzero(self, family=None):
        """The first nonzero entry, optionally within one family."""
        for name, residuals in self.families.items():
            if family is not None and name != family:
                continue
            for label, residual in residuals:
                for value in self.values(residual):
                    if not is_zero(value):
                        return name, label, value
        return None

    def summary(self):
        result = {}
        for family, residuals in self.families.items():
            nonzero = [
                label for label, residual in residuals if not self.residual_is_zero(residual)
            ]
            if not nonzero:
                result[family] = "zero"
                continue
            _, _, value = self.first_nonzero(family)
            numerator = getattr(value, "num", value)
            leading = numerator.leading_term() if hasattr(numerator, "leading_term") else value
            result[family] = f"nonzero at {nonzero[0]} (leading term {leading})"
        return result

    def __repr__(self):
        return f"<ResidualReport {self.subject}: {len(self.failures())} failures>"

    @property
    def data(self):
        return {
            "subject": self.subject,
            "status": "pass" if self.is_zero() else "fail",
            "families": self.summary(),
        }

    def serializable_data(self):
        return self.data


def _pairs(n):
    for alpha in range(n):
        for beta in range(alpha + 1, n):
            yield alpha, beta


def _symmetry_residual(matrices, alpha, beta):
    """M_alpha[., beta] - M_beta[., alpha]."""
    return [
        a - b for a, b in zip(matrices[alpha].column(beta), matrices[beta].column(alpha))
    ]


def _flatness(matrices, alpha, beta):
    return (
        matrices[beta].diff(alpha)
        - matrices[alpha].diff(beta)
        + matrices[alpha].commutator(matrices[beta])
    )


def _structure_checks(report, matrices, connection):
    n = len(matrices)
    for alpha, beta in _pairs(n):
        label = (alpha + 1, beta + 1)
        report.add("commutativity", label, _symmetry_residual(matrices, alpha, beta))
        report.add(
            "associativity", label, matrices[alpha].commutator(matrices[beta])
        )
        report.add("torsion", label, _symmetry_residual(connection, alpha, beta))
        report.add("flatness", label, _flatness(connection, alpha, beta))


def check_ss(S):
    """Residuals of the Saito axioms in matrix form.

    SS1: d_a C_b + [Gamma_a, C_b] is symmetric in a, b.
    SS2: E(C_a) + sum_m W^m_a C_m - [W, C_a] - C_a = 0.
    SS3: Q + e.Gamma = 0.
    SS4: E(Gamma_a) + sum_m W^m_a Gamma_m - [W, Gamma_a] + d_a W = 0.
    """
    n = S.n
    ring = S.ring
    report = ResidualReport(S.group.name if S.group is not None else None)
    W, Q = S.W, S.Q
    identity = identity_matrix(ring, n)

    report.add("unit", None, contract(S.e, S.mult) - identity)
    _structure_checks(report, S.mult, S.gamma)
    for alpha, beta in _pairs(n):
        first = S.mult[beta].diff(alpha) + S.gamma[alpha].commutator(S.mult[beta])
        second = S.mult[alpha].diff(beta) + S.gamma[beta].commutator(S.mult[alpha])
        report.add("ss1", (alpha + 1, beta + 1), first - second)
    for alpha in range(n):
        twisted = contract(W.column(alpha), S.mult)
        report.add(
            "ss2",
            alpha + 1,
            derivative_along(S.E, S.mult[alpha])
            + twisted
            - W.commutator(S.mult[alpha])
            - S.mult[alpha],
        )
    report.add("ss3", None, Q + contract(S.e, S.gamma))
    for alpha in range(n):
        twisted = contract(W.column(alpha), S.gamma)
        report.add(
            "ss4",
            alpha + 1,
            derivative_along(S.E, S.gamma[alpha])
            + twisted
            - W.commutator(S.gamma[alpha])
            + W.diff(alpha),
        )
    return report


def check_ass(A):
    """Residuals of the almost Saito axioms in matrix form.

    ASS1: d_a B_b + [Omega_a, B_b] is symmetric in a, b.
    ASS2: e(B_a) + sum_m Q^m_a B_m - [Q, B_a] + B_a (e.B) = 0.
    ASS3: W + E.Omega - r I = 0.
    ASS4: e(Omega_a) + sum_m Q^m_a Omega_m - [Q, Omega_a] + d_a Q
          + (Q + e.Omega) B_a = 0.
    """
    n = A.n
    ring = A.ring
    report = ResidualReport(A.group.name if A.group is not None else None)
    W, Q = A.W, A.Q
    identity = identity_matrix(ring, n)
    e_B = contract(A.e, A.mult)
    twist = A.twist()

    report.add("unit", None, contract(A.E, A.mult) - identity)
    _structure_checks(report, A.mult, A.omega)
    for alpha, beta in _pairs(n):
        first = A.mult[beta].diff(alpha) + A.omega[alpha].commutator(A.mult[beta])
        second = A.mult[alpha].diff(beta) + A.omega[beta].commutator(A.mult[alpha])
        report.add("ass1", (alpha + 1, beta + 1), first - second)
    for alpha in range(n):
        report.add(
            "ass2",
            alpha + 1,
            derivative_along(A.e, A.mult[alpha])
            + contract(Q.column(alpha), A.mult)
            - Q.commutator(A.mult[alpha])
            + A.mult[alpha] * e_B,
        )
    report.add(
        "ass3", None, W + contract(A.E, A.omega) - identity * A.r
    )
    for alpha in range(n):
        report.add(
            "ass4",
            alpha + 1,
            derivative_along(A.e, A.omega[alpha])
            + contract(Q.column(alpha), A.omega)
            - Q.commutator(A.omega[alpha])
            + Q.diff(alpha)
            + twist * A.mult[alpha],
        )
    return report


def extract_expansion(family):
    """Read Gamma_alpha, D_alpha and a off the x^1-expansion of Delta Omega.

    Delta Omega_alpha = (x^1)^n Gamma_alpha + (x^1)^(n-1) D_alpha + lower,
    Delta = (x^1)^n + a (x^1)^(n-1) + lower.
    """
    group = family.group
    n = family.n
    delta = family.delta
    if any(d <= 1 for d in group.degrees):
        raise AssumptionViolated("degrees above one", f"for {group.name}: degrees {group.degrees}")
    degree, leading = group.discriminant_profile()
    if degree != n or leading != 1:
        raise AssumptionViolated(
            "monic discriminant",
            f"for {group.name}: Delta has degree {degree} in x^1 with leading coefficient {leading}",
        )
    for alpha, P in enumerate(family.P):
        if any(value.degree(0) > n for _, _, value in P.entries()):
            raise PropertyViolation("vanishing leading connection", f"(Delta Omega_{alpha + 1} has x^1-degree above {n})")
    gamma = [P.map(lambda v: v.coeff(0, n)) for P in family.P]
    D = [P.map(lambda v: v.coeff(0, n - 1)) for P in family.P]
    a = delta.coeff(0, n - 1)

    if not gamma[0].is_zero():
        raise PropertyViolation("vanishing leading connection", f"(Gamma_1 is not zero for {group.name})")
    degrees = group.degrees
    for g, b, value in D[0].entries():
        if g == b:
            expected = CycNum.rational(1 - degrees[g]) / group.d1
            if value != group.x_ring.constant(expected):
                raise PropertyViolation("triangular D_1", f"(D_1[{g + 1},{g + 1}] = {value})")
        elif degrees[g] < degrees[b] and not value.is_zero():
            raise PropertyViolation("triangular D_1", f"(D_1[{g + 1},{b + 1}] = {value})")
    if D[0].det() != group.x_ring.constant(leading_block_determinant(group)):
        raise PropertyViolation("determinant of D_1", f"(det D_1 = {D[0].det()})")
    return ExpansionData(family, gamma, D, a)


def build_natural_saito(expansion, verify=True, enable_logging=False):
    """C_alpha = D_1^-1 (D_alpha - a Gamma_alpha), E = E_deg / d_1, e = d/dx^1."""
    group = expansion.group
    ring = expansion.ring
    n = group.rank
    try:
        D1_inverse = inverse(expansion.D[0])
    except DivisionByZero:
        raise PropertyViolation("determinant of D_1", f"(D_1 is singular for {group.name})") from None
    mult = [
        D1_inverse * (D - G * expansion.a) for D, G in zip(expansion.D, expansion.gamma)
    ]
    S = SaitoData(
        ring,
        expansion.gamma,
        mult,
        euler_vector(ring),
        coordinate_field(ring, 0),
        group=group,
    )
    if mult[0] != identity_matrix(ring, n):
        raise PropertyViolation("identity C_1", f"(C_1 is not the identity for {group.name})")
    U = S.discriminant_matrix()
    if U.det() != group.discriminant_x:
        raise PropertyViolation("det U = Delta", f"(det U = {U.det()} for {group.name})")
    if enable_logging:
        logging.info("Natural Saito structure of %s extracted", group.name)
    if verify:
        report = check_ss(S)
        if not report.is_zero():
            family, label = report.failures()[0]
            raise PropertyViolation(family, f"at {label} for {group.name}")
        if enable_logging:
            logging.info("Saito axioms of %s verified", group.name)
    return S


def natural_saito(group, verify=True, enable_logging=False):
    family = natural_connection(group, verify=verify, enable_logging=enable_logging)
    return build_natural_saito(
        extract_expansion(family), verify=verify, enable_logging=enable_logging
    )


def scale_structure(S, c):
    """The equivalent structure with c * C and e / c."""
    c = CycNum.coerce(c)
    if c.is_zero():
        raise DivisionByZero(c)
    return S.replace(
        mult=[m * c for m in S.mult], e=[v * c.inverse() for v in S.e]
    )


def shift_euler(S, value):
    """The Saito structure with Euler field E - value * e."""
    value = CycNum.coerce(value)
    return S.replace(E=[a - b * value for a, b in zip(S.E, S.e)])


def vanishing_gamma_entries(S, index=None):
    """Gamma^gamma_{nn} for every gamma (all zero for G(m,m,n))."""
    if index is None:
        index = S.n - 1
    return [S.gamma[index][gamma, index] for gamma in range(S.n)]
