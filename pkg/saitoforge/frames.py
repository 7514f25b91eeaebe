"""Coordinate changes of Saito structures."""

from functools import reduce
import operator

from .exactalg import MatrixR, RatFn, inverse
from .exceptions import NotInvariant
from .groups import express_in
from .structures import SaitoData


class FrameChange(object):
    """A change of coordinates x -> t(x) on the frame of a structure.

    Attributes:
        coordinates: the new coordinates t^a as MPoly in the old ring
        jacobian: A[a, alpha] = dt^a / dx^alpha
        jacobian_inverse: A^-1, polynomial when det A is constant
    """

    def __init__(self, coordinates):
        self.coordinates = list(coordinates)
        n = len(self.coordinates)
        self.jacobian = MatrixR.build(
            n, lambda a, alpha: self.coordinates[a].diff(alpha)
        )
        self.jacobian_inverse = inverse(self.jacobian)

    @property
    def n(self):
        return len(self.coordinates)

    def hessian(self, alpha):
        """H_alpha[c, beta] = d_alpha d_beta t^c."""
        return self.jacobian.diff(alpha)

    def _weighted(self, alpha_matrices, a):
        A_inverse = self.jacobian_inverse
        return reduce(
            operator.add,
            (m * A_inverse[alpha, a] for alpha, m in enumerate(alpha_matrices)),
        )

    def connection(self, gamma):
        """Gamma'_a = sum_alpha (A^-1)^alpha_a (A Gamma_alpha - H_alpha) A^-1."""
        A, A_inverse = self.jacobian, self.jacobian_inverse
        conjugated = [
            (A * G - self.hessian(alpha)) * A_inverse for alpha, G in enumerate(gamma)
        ]
        return [self._weighted(conjugated, a) for a in range(self.n)]

    def multiplication(self, mult):
        A, A_inverse = self.jacobian, self.jacobian_inverse
        conjugated = [A * C * A_inverse for C in mult]
        return [self._weighted(conjugated, a) for a in range(self.n)]

    def vector(self, components):
        return self.jacobian.apply(components)


def rewrite_entry(value, coordinates, ring, cache):
    """Write a function of the old coordinates in terms of the new ones."""
    if isinstance(value, RatFn):
        if value.is_polynomial():
            return express_in(value.to_poly(), coordinates, ring, cache)
        return RatFn(
            express_in(value.num, coordinates, ring, cache),
            express_in(value.den, coordinates, ring, cache),
        )
    return express_in(value, coordinates, ring, cache)


def transform_frame(S, coordinates, ring, flat_change=None):
    """The Saito structure S in the coordinates t^a(x), as a SaitoData over
    ``ring`` whose variables are the t^a.

    Raises NotInvariant when an entry cannot be written in the new
    coordinates.
    """
    change = FrameChange(coordinates)
    cache = {}

    def rewrite(value):
        return rewrite_entry(value, coordinates, ring, cache)

    try:
        gamma = [m.map(rewrite) for m in change.connection(S.gamma)]
        mult = [m.map(rewrite) for m in change.multiplication(S.mult)]
        E = [rewrite(v) for v in change.vector(S.E)]
        e = [rewrite(v) for v in change.vector(S.e)]
    except NotInvariant as error:
        raise NotInvariant(error.polynomial, f"in the frame {list(ring.names)}") from None
    return SaitoData(
        ring, gamma, mult, E, e, group=S.group, flat_change=flat_change
    )
