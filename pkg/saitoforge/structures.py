"""Matrix representations of Saito and almost Saito structures.

For a frame of coordinates x^1 ... x^n the matrices follow one convention
throughout: ``M_alpha[gamma, beta]`` is the component M^gamma_{alpha beta},
so ``gamma`` is the row and ``beta`` the column. Vector fields are lists of
components. Entries are MPoly or RatFn over the frame ring.
"""

from functools import reduce
import operator

from .exactalg import CycNum, MatrixR, MPoly, PolyRing, RatFn
from .exceptions import ParseError


def zero_matrix(ring, n):
    return MatrixR.zeros(n, ring.zero)


def identity_matrix(ring, n):
    return MatrixR.identity(n, ring.one, ring.zero)


def contract(vector, matrices):
    """sum_mu v^mu M_mu."""
    return reduce(operator.add, (m * v for v, m in zip(vector, matrices)))


def jacobian_of(vector):
    """W[mu, alpha] = d_alpha v^mu."""
    n = len(vector)
    return MatrixR.build(n, lambda mu, alpha: vector[mu].diff(alpha))


def derivative_along(vector, matrix):
    """The matrix of derivatives sum_mu v^mu d_mu M."""
    return reduce(
        operator.add, (matrix.diff(mu) * v for mu, v in enumerate(vector))
    )


def euler_vector(ring, scale=None):
    """Components of E_deg / d_1 (or E_deg scaled by ``scale``)."""
    if scale is None:
        scale = CycNum.rational(1) / ring.weights[0]
    return [g * (scale * w) for g, w in zip(ring.gens(), ring.weights)]


def coordinate_field(ring, index):
    return [ring.one if k == index else ring.zero for k in range(ring.ngens)]


def _entry_data(value):
    if isinstance(value, RatFn):
        if value.den.is_constant():
            return (value.num * value.den.constant_value().inverse()).serializable_data()
        return value.serializable_data()
    return value.serializable_data()


def _entry_from(ring, data):
    if isinstance(data, dict):
        return RatFn.from_data(ring, data)
    return MPoly.from_data(ring, data)


def _matrices_data(matrices):
    return [[[_entry_data(v) for v in row] for row in m.rows] for m in matrices]


def _matrices_from(ring, data):
    try:
        return [
            MatrixR([[_entry_from(ring, v) for v in row] for row in m]) for m in data
        ]
    except (TypeError, ValueError) as error:
        raise ParseError(data, "as a list of matrices") from error


def _flat_change_from(data):
    if data is None:
        return None
    ring = PolyRing.from_data(data["ring"])
    return _matrices_from(ring, [data["X"]])[0]


def _vector_data(vector):
    return [_entry_data(v) for v in vector]


def _vector_from(ring, data):
    return [_entry_from(ring, v) for v in data]


class SaitoData(object):
    """A Saito structure (connection Gamma, multiplication C, Euler field E,
    unit e) in a coordinate frame.

    Attributes:
        ring: coordinates of the frame, weighted by their degrees
        gamma: Christoffel matrices Gamma_alpha
        mult: multiplication matrices C_alpha
        E: Euler field components
        e: unit field components
        flat_change: the triangular matrix X of the passage to flat coordinates
    """

    def __init__(self, ring, gamma, mult, E, e, group=None, flat_change=None):
        self.ring = ring
        self.gamma = list(gamma)
        self.mult = list(mult)
        self.E = list(E)
        self.e = list(e)
        self.group = group
        self.flat_change = flat_change

    @property
    def n(self):
        return len(self.mult)

    @property
    def degrees(self):
        return self.ring.weights

    @property
    def W(self):
        return jacobian_of(self.E)

    @property
    def Q(self):
        return jacobian_of(self.e)

    @property
    def unit_index(self):
        """alpha with e = d/dx^alpha, or None."""
        for alpha in range(self.n):
            if all(
                (v == 1) if k == alpha else (v == 0) for k, v in enumerate(self.e)
            ):
                return alpha
        return None

    def discriminant_matrix(self):
        """U = E . C."""
        return contract(self.E, self.mult)

    def replace(self, **changes):
        values = {
            "ring": self.ring,
            "gamma": self.gamma,
            "mult": self.mult,
            "E": self.E,
            "e": self.e,
            "group": self.group,
            "flat_change": self.flat_change,
        }
        values.update(changes)
        return SaitoData(**values)

    def __eq__(self, other):
        if not isinstance(other, SaitoData):
            return NotImplemented
        return (
            self.ring == other.ring
            and all(a == b for a, b in zip(self.gamma, other.gamma))
            and all(a == b for a, b in zip(self.mult, other.mult))
            and all(a == b for a, b in zip(self.E, other.E))
            and all(a == b for a, b in zip(self.e, other.e))
        )

    __hash__ = None

    def __repr__(self):
        name = self.group.name if self.group is not None else "?"
        return f"<SaitoData {name} frame={list(self.ring.names)}>"

    @property
    def data(self):
        return {
            "group": self.group.name if self.group is not None else None,
            "ring": self.ring.serializable_data(),
            "degrees": list(self.degrees),
            "Gamma": _matrices_data(self.gamma),
            "C": _matrices_data(self.mult),
            "E": _vector_data(self.E),
            "unit": _vector_data(self.e),
            "flat_change": self._flat_change_data(),
        }

    def _flat_change_data(self):
        if self.flat_change is None:
            return None
        ring = self.flat_change[0, 0].ring
        return {
            "ring": ring.serializable_data(),
            "X": _matrices_data([self.flat_change])[0],
        }

    def serializable_data(self):
        return self.data

    @classmethod
    def from_data(cls, data, group=None):
        try:
            ring = PolyRing.from_data(data["ring"])
            flat = data.get("flat_change")
            return cls(
                ring,
                _matrices_from(ring, data["Gamma"]),
                _matrices_from(ring, data["C"]),
                _vector_from(ring, data["E"]),
                _vector_from(ring, data["unit"]),
                group=group,
                flat_change=_flat_change_from(flat),
            )
        except (KeyError, TypeError) as error:
            raise ParseError(data, "as a Saito structure") from error


class AlmostSaitoData(object):
    """An almost Saito structure (connection Omega, multiplication B with
    unit E, vector field e, parameter r) in a coordinate frame."""

    def __init__(self, ring, omega, mult, E, e, r, group=None):
        self.ring = ring
        self.omega = list(omega)
        self.mult = list(mult)
        self.E = list(E)
        self.e = list(e)
        self.r = CycNum.coerce(r)
        self.group = group

    @property
    def n(self):
        return len(self.mult)

    @property
    def W(self):
        return jacobian_of(self.E)

    @property
    def Q(self):
        return jacobian_of(self.e)

    def twist(self):
        """The matrix Q + e . Omega of the endomorphism nabla e."""
        return self.Q + contract(self.e, self.omega)

    def replace(self, **changes):
        values = {
            "ring": self.ring,
            "omega": self.omega,
            "mult": self.mult,
            "E": self.E,
            "e": self.e,
            "r": self.r,
            "group": self.group,
        }
        values.update(changes)
        return AlmostSaitoData(**values)

    def __eq__(self, other):
        if not isinstance(other, AlmostSaitoData):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.r == other.r
            and all(a == b for a, b in zip(self.omega, other.omega))
            and all(a == b for a, b in zip(self.mult, other.mult))
            and all(a == b for a, b in zip(self.E, other.E))
            and all(a == b for a, b in zip(self.e, other.e))
        )

    __hash__ = None

    def __repr__(self):
        name = self.group.name if self.group is not None else "?"
        return f"<AlmostSaitoData {name} r={self.r}>"

    @property
    def data(self):
        return {
            "group": self.group.name if self.group is not None else None,
            "ring": self.ring.serializable_data(),
            "Omega": _matrices_data(self.omega),
            "B": _matrices_data(self.mult),
            "E": _vector_data(self.E),
            "e": _vector_data(self.e),
            "r": self.r.serializable_data(),
        }

    def serializable_data(self):
        return self.data

    @classmethod
    def from_data(cls, data, group=None):
        try:
            ring = PolyRing.from_data(data["ring"])
            return cls(
                ring,
                _matrices_from(ring, data["Omega"]),
                _matrices_from(ring, data["B"]),
                _vector_from(ring, data["E"]),
                _vector_from(ring, data["e"]),
                CycNum.from_data(data["r"]),
                group=group,
            )
        except (KeyError, TypeError) as error:
            raise ParseError(data, "as an almost Saito structure") from error


class ExpansionData(object):
    """Coefficients of (x^1)^n and (x^1)^(n-1) in Delta * Omega_alpha."""

    def __init__(self, family, gamma, D, a):
        self.family = family
        self.gamma = list(gamma)
        self.D = list(D)
        self.a = a

    @property
    def group(self):
        return self.family.group

    @property
    def ring(self):
        return self.family.ring

    def __repr__(self):
        return f"<ExpansionData {self.group.name}>"
