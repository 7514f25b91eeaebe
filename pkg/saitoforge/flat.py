"""Flat coordinates, the Okubo system and basic derivations."""

import logging

from .connection import POLYNOMIAL_LIFT
from .exactalg import CycNum, MatrixR, PolyRing, RatFn, inverse
from .exceptions import DivisionByZero, NonIntegrable, NotDivisible, PropertyViolation, SingularU
from .frames import transform_frame


def flat_ring(degrees):
    return PolyRing([f"t{k}" for k in range(1, len(degrees) + 1)], degrees)


def _euler_integral(ring, derivatives, degree):
    """The homogeneous f of weighted degree ``degree`` with d_mu f = derivatives[mu]."""
    total = ring.zero
    for x, w, value in zip(ring.gens(), ring.weights, derivatives):
        total = total + x * value * w
    return total * (CycNum.rational(1) / degree)


def flat_coordinates(S):
    """The unit upper triangular X with d_mu X + Gamma_mu X = 0 and the flat
    coordinates t^alpha = (1/d_alpha) sum_beta d_beta x^beta (X^-1)^alpha_beta.

    Each column is filled upwards: X^gamma_beta only involves X^nu_beta
    with d_nu < d_gamma.
    """
    ring = S.ring
    n = S.n
    degrees = ring.weights
    X = [[ring.zero] * n for _ in range(n)]
    for beta in range(n):
        X[beta][beta] = ring.one
        for gamma in range(beta - 1, -1, -1):
            derivatives = []
            for mu in range(n):
                value = ring.zero
                for nu in range(gamma + 1, n):
                    if not X[nu][beta].is_zero():
                        value = value - S.gamma[mu][gamma, nu] * X[nu][beta]
                derivatives.append(value)
            k = degrees[gamma] - degrees[beta]
            if k <= 0:
                if any(not v.is_zero() for v in derivatives):
                    raise NonIntegrable(gamma, beta)
                continue
            candidate = _euler_integral(ring, derivatives, k)
            if any(candidate.diff(mu) != derivatives[mu] for mu in range(n)):
                raise NonIntegrable(gamma, beta)
            X[gamma][beta] = candidate
    X = MatrixR(X)
    return X, coordinates_from_change(X, ring)


def flat_structure(S, enable_logging=False):
    """S in its flat coordinates; the Christoffel symbols must vanish there."""
    X, t = flat_coordinates(S)
    ring = flat_ring(S.ring.weights)
    flat = transform_frame(S, t, ring, flat_change=X)
    if any(not G.is_zero() for G in flat.gamma):
        raise PropertyViolation("flat frame", f"(Christoffel symbols survive in {list(ring.names)})")
    if enable_logging:
        name = S.group.name if S.group is not None else "structure"
        logging.info("Flat coordinates of %s: %s", name, ", ".join(str(v) for v in t))
    return flat


def _bracket(degrees):
    d1 = degrees[0]
    return MatrixR.diagonal(
        [CycNum.rational(1) + CycNum.rational(1 - d) / d1 for d in degrees],
        CycNum.rational(0),
    )


def okubo_system(S):
    """Omega^X_alpha = U^-1 C_alpha ((1/d_1 + 1) I - (1/d_1) diag(d))."""
    U = S.discriminant_matrix()
    try:
        U_inverse = inverse(U)
    except DivisionByZero:
        raise SingularU() from None
    bracket = _bracket(S.ring.weights).map(S.ring.constant)
    return [U_inverse * (C * bracket) for C in S.mult]


def okubo_gauge_residual(S, A):
    """Omega^X_alpha - U^-1 (Omega_alpha U + d_alpha U) in a flat frame."""
    U = S.discriminant_matrix()
    U_inverse = inverse(U)
    system = okubo_system(S)
    return [
        Z - U_inverse * (omega * U + U.diff(alpha))
        for alpha, (Z, omega) in enumerate(zip(system, A.omega))
    ]


def frame_coordinates(S, group):
    """The coordinates of the frame of S as polynomials in u."""
    if S.ring == group.x_ring:
        return list(group.invariants)
    if S.flat_change is None:
        raise ValueError(f"Frame {list(S.ring.names)} is not attached to {group.name}")
    t = coordinates_from_change(S.flat_change, group.x_ring)
    return [value.compose(group.invariants) for value in t]


def coordinates_from_change(X, ring):
    """t^alpha = (1/d_alpha) sum_beta d_beta x^beta (X^-1)^alpha_beta."""
    degrees = ring.weights
    X_inverse = inverse(X)
    t = []
    for alpha in range(X.n):
        value = ring.zero
        for beta, x in enumerate(ring.gens()):
            value = value + x * X_inverse[alpha, beta] * degrees[beta]
        t.append(value * (CycNum.rational(1) / degrees[alpha]))
    return t


def _coordinate_jacobian(coordinates):
    n = len(coordinates)
    return MatrixR.build(n, lambda a, i: coordinates[a].diff(i))


def basic_derivations(S, group):
    """Lifts to V of X_beta = E * d_beta, as vectors of MPoly in u.

    The lift is adj(J) U(x(u)) / det J with J the Jacobian of the frame
    coordinates; it is polynomial and dx^alpha(X_beta) = U^alpha_beta.
    """
    coordinates = frame_coordinates(S, group)
    adjugate, det = _coordinate_jacobian(coordinates).adjugate_det()
    U = S.discriminant_matrix().map(lambda v: v.compose(coordinates))
    product = adjugate * U
    try:
        lifted = product.map(lambda v: v.exact_div(det))
    except NotDivisible:
        raise PropertyViolation(POLYNOMIAL_LIFT, f"(basic derivations of {group.name})") from None
    return [lifted.column(beta) for beta in range(S.n)]


def structure_constants_u(A, group, coordinates=None):
    """The multiplication of A pulled back to the u-frame.

    Returns matrices M_i with M_i[k, j] the d/du^k component of
    d/du^i * d/du^j.
    """
    if coordinates is None:
        coordinates = list(group.invariants)
    J = _coordinate_jacobian(coordinates)
    J_inverse = inverse(J)
    J_rational = J.map(RatFn)
    pulled = [B.map(lambda v: _compose(v, coordinates)) for B in A.mult]
    conjugated = [J_inverse * B * J_rational for B in pulled]
    result = []
    for i in range(group.rank):
        total = conjugated[0] * J[0, i]
        for alpha in range(1, group.rank):
            total = total + conjugated[alpha] * J[alpha, i]
        result.append(total)
    return result


def hessian_structure_constants(group, coordinates=None):
    """sum_gamma (d_1 / (d_gamma - 1)) Hess(x^gamma)_ij (J^-1)[k, gamma]."""
    if coordinates is None:
        coordinates = list(group.invariants)
    J_inverse = inverse(_coordinate_jacobian(coordinates))
    n = group.rank
    factors = [CycNum.rational(group.d1) / (d - 1) for d in group.degrees]
    hessians = [
        MatrixR.build(n, lambda i, j, x=x: x.diff(i).diff(j)) for x in coordinates
    ]
    result = []
    for i in range(n):
        result.append(
            MatrixR.build(
                n,
                lambda k, j, i=i: sum(
                    (
                        J_inverse[k, gamma] * (hessians[gamma][i, j] * factors[gamma])
                        for gamma in range(n)
                    ),
                    RatFn(group.u_ring.zero),
                ),
            )
        )
    return result


def _compose(value, coordinates):
    if isinstance(value, RatFn):
        return value.compose(coordinates)
    return RatFn(value.compose(coordinates))
