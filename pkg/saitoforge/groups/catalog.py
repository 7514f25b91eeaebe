import logging
import math
import re
from functools import reduce

from ..constants import CATALOG
from ..exactalg import MatrixR, PolyRing, i_sqrt3, inverse, sqrt5
from ..exceptions import (
    NotInvariant,
    ParseError,
    ReducibleGroup,
    UnsupportedGroup,
)
from . import generators as gen
from .invariants import act, invariant_reduce, semi_invariant_factor, verify_invariance

_MONOMIAL_NAME = re.compile(r"^G\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)$")
_EXCEPTIONAL_NAME = re.compile(r"^G(\d+)$")


def monomial_name(m, p, n):
    return f"G({m},{p},{n})"


def parse_group_name(label):
    """Normalise a group label to ("monomial", (m, p, n)) or ("exceptional", k).

    ``label`` is a name such as "G(3,3,2)" or "G4", or the JSON form
    {"name": ..., "params": {"m": .., "p": .., "n": ..}}.
    """
    if isinstance(label, dict):
        params = label.get("params")
        if params:
            try:
                return "monomial", (int(params["m"]), int(params["p"]), int(params["n"]))
            except (KeyError, TypeError, ValueError) as error:
                raise ParseError(label, "as a group label") from error
        label = label.get("name", "")
    if not isinstance(label, str):
        raise ParseError(label, "as a group label")
    text = label.strip().replace(" ", "")
    match = _MONOMIAL_NAME.match(text)
    if match:
        return "monomial", tuple(int(v) for v in match.groups())
    match = _EXCEPTIONAL_NAME.match(text)
    if match:
        return "exceptional", int(match.group(1))
    raise ParseError(label, "as a group name")


def u_ring(n):
    if n == 2:
        return PolyRing(["u", "v"])
    return PolyRing([f"u{k}" for k in range(1, n + 1)])


def x_ring(degrees):
    names = ["x", "y", "z"][: len(degrees)]
    return PolyRing(names, degrees)


class GroupData(object):
    """A finite complex reflection group with its basic invariants.

    Attributes:
        name: "G(m,p,n)" or "G4" ... "G22"
        rank: n
        degrees: d_1 >= ... >= d_n, the weights of ``x_ring``
        generators: MatrixR over CycNum acting on u
        invariants: basic invariants x^alpha as MPoly in ``u_ring``
        discriminant_u: delta(u)
        discriminant_x: Delta(x) with Delta(x(u)) = delta(u)
    """

    def __init__(
        self,
        name,
        generators,
        invariants,
        discriminant_u,
        discriminant_x,
        params=None,
        family="monomial",
    ):
        self.name = name
        self.generators = list(generators)
        self.invariants = list(invariants)
        self.rank = len(self.invariants)
        self.u_ring = self.invariants[0].ring
        self.x_ring = discriminant_x.ring
        self.degrees = tuple(self.x_ring.weights)
        self.discriminant_u = discriminant_u
        self.discriminant_x = discriminant_x
        self.params = params
        self.family = family
        self.image_cache = {}
        self._jacobian = None

    @property
    def d1(self):
        return self.degrees[0]

    @property
    def max_deg_multiplicity(self):
        return sum(1 for d in self.degrees if d == self.degrees[0])

    def discriminant_profile(self):
        """Degree of Delta in x^1 and the coefficient of that power."""
        degree = self.discriminant_x.degree(0)
        return degree, self.discriminant_x.coeff(0, degree)

    @property
    def is_duality(self):
        degree, leading = self.discriminant_profile()
        return (
            degree == self.rank
            and leading == 1
            and all(d > 1 for d in self.degrees)
        )

    def jacobian(self):
        """J[alpha, i] = d x^alpha / d u^i."""
        if self._jacobian is None:
            self._jacobian = MatrixR.build(
                self.rank, lambda a, i: self.invariants[a].diff(i)
            )
        return self._jacobian

    def hessian(self, gamma):
        x = self.invariants[gamma]
        return MatrixR.build(self.rank, lambda i, j: x.diff(i).diff(j))

    def conjugate(self, h, name=None):
        """The group h^-1 G h, with invariants x(h u) in the same x-frame."""
        h_inverse = inverse(h)
        return GroupData(
            name or f"{self.name}^h",
            [h_inverse * g * h for g in self.generators],
            [act(h, x) for x in self.invariants],
            act(h, self.discriminant_u),
            self.discriminant_x,
            params=self.params,
            family=self.family,
        )

    def __repr__(self):
        return f"<GroupData {self.name} degrees={self.degrees}>"

    @property
    def data(self):
        return {
            "name": self.name,
            "params": dict(zip("mpn", self.params)) if self.params else None,
            "rank": self.rank,
            "degrees": list(self.degrees),
            "invariants": [str(x) for x in self.invariants],
            "discriminant_u": str(self.discriminant_u),
            "discriminant_x": str(self.discriminant_x),
            "duality": self.is_duality,
        }

    def serializable_data(self):
        return self.data


def tetrahedral_forms(ring):
    u, v = ring.gens()
    w = i_sqrt3() * 2
    return {
        "f": u**4 + u**2 * v**2 * w + v**4,
        "h": u**4 - u**2 * v**2 * w + v**4,
        "t": u**5 * v - u * v**5,
    }


def octahedral_forms(ring):
    u, v = ring.gens()
    return {
        "f": u**5 * v - u * v**5,
        "h": u**8 + 14 * u**4 * v**4 + v**8,
        "t": u**12 - 33 * u**8 * v**4 - 33 * u**4 * v**8 + v**12,
    }


def icosahedral_forms(ring):
    u, v = ring.gens()
    c = 22 * sqrt5().inverse()
    f = (
        u**12
        + u**10 * v**2 * c
        - 33 * u**8 * v**4
        - u**6 * v**6 * (2 * c)
        - 33 * u**4 * v**8
        + u**2 * v**10 * c
        + v**12
    )
    hess = f.diff(0).diff(0) * f.diff(1).diff(1) - f.diff(0).diff(1) ** 2
    h = hess * (sqrt5() / 5808)
    t = (f.diff(0) * h.diff(1) - f.diff(1) * h.diff(0)) * (-(480 * sqrt5()).inverse())
    return {"f": f, "h": h, "t": t}


def _g12():
    return [gen.r3(), gen.conjugate_by(gen.r3(), gen.r()), gen.sigma(8)]


def _q():
    return gen.conjugate_by(gen.r1(), inverse(gen.r5()))


def _g22():
    r5 = gen.r5()
    return [
        gen.r(),
        gen.conjugate_by(gen.r(), inverse(r5)),
        gen.conjugate_by(gen.r(), inverse(r5 * r5)),
    ]


# name: (forms, generators, x, y, delta) with x, y, delta as {form: exponent}
_EXCEPTIONAL = {
    4: (tetrahedral_forms, lambda: [gen.r1(), gen.conjugate_by(gen.r1(), gen.r())], {"t": 1}, {"f": 1}, {"h": 3}),
    5: (tetrahedral_forms, lambda: [gen.r1(), gen.conjugate_by(gen.r2(), gen.r())], {"f": 3}, {"t": 1}, {"f": 3, "h": 3}),
    6: (tetrahedral_forms, lambda: [gen.r(), gen.r1()], {"t": 2}, {"f": 1}, {"h": 3, "t": 2}),
    7: (tetrahedral_forms, lambda: [gen.r(), gen.r1(), gen.r2()], {"f": 3}, {"t": 2}, {"f": 3, "h": 3, "t": 2}),
    8: (octahedral_forms, lambda: [gen.r4(), gen.conjugate_by(gen.r4(), gen.r3())], {"t": 1}, {"h": 1}, {"f": 4}),
    9: (octahedral_forms, lambda: [gen.r3(), gen.r4()], {"t": 2}, {"h": 1}, {"f": 4, "t": 2}),
    10: (octahedral_forms, lambda: [gen.r1(), gen.conjugate_by(gen.r4(), gen.r3())], {"h": 3}, {"t": 1}, {"f": 4, "h": 3}),
    11: (octahedral_forms, lambda: [gen.r1(), gen.r3(), gen.r4()], {"h": 3}, {"t": 2}, {"f": 4, "h": 3, "t": 2}),
    12: (octahedral_forms, _g12, {"h": 1}, {"f": 1}, {"t": 2}),
    13: (octahedral_forms, lambda: [gen.r(), gen.r3(), gen.sigma(8)], {"f": 2}, {"h": 1}, {"f": 2, "t": 2}),
    14: (octahedral_forms, lambda: [gen.r1(), gen.conjugate_by(gen.r3(), gen.r())], {"t": 2}, {"f": 1}, {"h": 3, "t": 2}),
    15: (octahedral_forms, lambda: [gen.r(), gen.r1(), gen.r3()], {"t": 2}, {"f": 2}, {"f": 2, "h": 3, "t": 2}),
    16: (icosahedral_forms, lambda: [gen.r5(), gen.conjugate_by(gen.r5(), gen.r())], {"t": 1}, {"h": 1}, {"f": 5}),
    17: (icosahedral_forms, lambda: [gen.r(), gen.r5()], {"t": 2}, {"h": 1}, {"f": 5, "t": 2}),
    18: (icosahedral_forms, lambda: [gen.r1() * gen.r1(), gen.r5()], {"h": 3}, {"t": 1}, {"f": 5, "h": 3}),
    19: (icosahedral_forms, lambda: [gen.r(), gen.r1(), gen.r5()], {"h": 3}, {"t": 2}, {"f": 5, "h": 3, "t": 2}),
    20: (icosahedral_forms, lambda: [_q(), gen.conjugate_by(_q(), gen.r())], {"t": 1}, {"f": 1}, {"h": 3}),
    21: (icosahedral_forms, lambda: [gen.r(), _q()], {"t": 2}, {"f": 1}, {"h": 3, "t": 2}),
    22: (icosahedral_forms, _g22, {"h": 1}, {"f": 1}, {"t": 2}),
}

_FAMILIES = {
    tetrahedral_forms: "tetrahedral",
    octahedral_forms: "octahedral",
    icosahedral_forms: "icosahedral",
}


def _product(forms, exponents):
    return reduce(
        lambda a, b: a * b, (forms[name] ** e for name, e in sorted(exponents.items()))
    )


def _check_block_invariance(name, forms, generators, invariants):
    """Check the invariants through the characters of their factors."""
    for g in generators:
        factors = {}
        for key, form in forms.items():
            factors[key] = semi_invariant_factor(g, form)
        for exponents in invariants:
            value = 1
            for key, e in exponents.items():
                if factors[key] is None:
                    raise NotInvariant(forms[key], f"under a generator of {name}")
                value = factors[key] ** e * value
            if value != 1:
                raise NotInvariant(
                    _product(forms, exponents), f"under a generator of {name}"
                )


def _exceptional(k):
    name = f"G{k}"
    if name in CATALOG.UNSUPPORTED or k not in _EXCEPTIONAL:
        raise UnsupportedGroup(name)
    forms_of, generators_of, x, y, delta = _EXCEPTIONAL[k]
    ring = u_ring(2)
    forms = forms_of(ring)
    generators = generators_of()
    _check_block_invariance(name, forms, generators, [x, y])
    return (
        name,
        generators,
        [_product(forms, x), _product(forms, y)],
        _product(forms, delta),
        None,
        _FAMILIES[forms_of],
    )


def _elementary_symmetric(values):
    e1 = values[0] + values[1] + values[2]
    e2 = values[0] * values[1] + values[0] * values[2] + values[1] * values[2]
    return e1, e2


def _monomial(m, p, n):
    name = monomial_name(m, p, n)
    if m < 1 or p < 1 or m % p:
        raise UnsupportedGroup(name)
    if m == 1 or (m, p, n) == (2, 2, 2):
        raise ReducibleGroup(name)
    if n < 2 or n > CATALOG.MAX_MONOMIAL_RANK:
        raise UnsupportedGroup(name)
    ring = u_ring(n)
    u = ring.gens()
    powers = [ui**m for ui in u]
    top = reduce(lambda a, b: a * b, u) ** (m // p)
    if n == 2:
        if p == 1:
            invariants = [top, powers[0] + powers[1]]
        else:
            invariants = [powers[0] + powers[1], top]
        vandermonde = (powers[0] - powers[1]) ** 2
    else:
        e1, e2 = _elementary_symmetric(powers)
        invariants = sorted(
            [e2, e1, top], key=lambda x: -x.weighted_degree()
        )
        vandermonde = reduce(
            lambda a, b: a * b,
            ((powers[i] - powers[j]) ** 2 for i in range(n) for j in range(i + 1, n)),
        )
    delta = vandermonde if p == m else top * vandermonde
    generators = gen.monomial_generators(m, p, n)
    return name, generators, invariants, delta, (m, p, n), "monomial"


def build_group(label, enable_logging=False):
    """Build and verify a catalog group.

    The discriminant Delta is obtained by rewriting delta in the basic
    invariants; when its top coefficient in x^1 is a constant it is made
    monic, and delta is rescaled with it.
    """
    kind, params = parse_group_name(label)
    if kind == "monomial":
        name, generators, invariants, delta, params, family = _monomial(*params)
    else:
        name, generators, invariants, delta, params, family = _exceptional(params)

    ring = x_ring([x.weighted_degree() for x in invariants])
    provisional = GroupData(
        name, generators, invariants, delta, ring.zero, params=params, family=family
    )
    discriminant = invariant_reduce(delta, provisional)
    degree = discriminant.degree(0)
    leading = discriminant.coeff(0, degree)
    if leading.is_constant() and leading.constant_value() != 1:
        scale = leading.constant_value().inverse()
        discriminant = discriminant * scale
        delta = delta * scale
    group = GroupData(
        name, generators, invariants, delta, discriminant, params=params, family=family
    )
    group.image_cache = provisional.image_cache
    if family == "monomial":
        for x in invariants:
            check = verify_invariance(x, group)
            if not check:
                raise NotInvariant(
                    x, f"under generator {check.generator_index} of {name}"
                )
    if group.jacobian().det().is_zero():
        raise NotInvariant(invariants[0], f"(basic invariants of {name} are dependent)")
    if enable_logging:
        logging.info(
            "Built %s: degrees %s, Delta = %s", name, group.degrees, discriminant
        )
    return group


def _canonical_key(g, order):
    return tuple(tuple(v.promote(order).coeffs) for row in g.rows for v in row)


def group_order(group, limit=20000):
    """Order of the group generated by ``group.generators``, by closure."""
    order = reduce(
        lambda a, b: a * b // math.gcd(a, b),
        (v.order for g in group.generators for row in g.rows for v in row),
        1,
    )
    identity = gen.identity(group.rank)
    seen = {_canonical_key(identity, order)}
    frontier = [identity]
    while frontier:
        following = []
        for element in frontier:
            for g in group.generators:
                product = element * g
                key = _canonical_key(product, order)
                if key not in seen:
                    seen.add(key)
                    following.append(product)
                    if len(seen) > limit:
                        raise ValueError(f"{group.name} has more than {limit} elements")
        frontier = following
    return len(seen)
