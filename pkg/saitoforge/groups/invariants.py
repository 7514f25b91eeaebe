import logging

from ..exactalg import MPoly, linsolve
from ..exceptions import Inconsistent, NotInvariant, ZeroProjection


def linear_images(g, ring):
    """The coordinates of g u as linear forms in ``ring``."""
    gens = ring.gens()
    images = []
    for i in range(g.n):
        image = ring.zero
        for j in range(g.n):
            if not g[i, j].is_zero():
                image = image + gens[j] * g[i, j]
        images.append(image)
    return images


def act(g, p):
    """The polynomial u -> p(g u)."""
    return p.compose(linear_images(g, p.ring))


def homogeneous_components(p):
    components = {}
    for exps, coeff in p.terms.items():
        components.setdefault(p.ring.wdeg(exps), {})[exps] = coeff
    return [(degree, MPoly(p.ring, terms)) for degree, terms in sorted(components.items())]


def monomial_image(exps, images, cache):
    """images[0]^exps[0] * images[1]^exps[1] * ..., memoised in ``cache``."""
    exps = tuple(exps)
    if exps in cache:
        return cache[exps]
    position = next((k for k, e in enumerate(exps) if e), None)
    if position is None:
        result = images[0].ring.one
    else:
        lowered = list(exps)
        lowered[position] -= 1
        result = monomial_image(lowered, images, cache) * images[position]
    cache[exps] = result
    return result


def _express_homogeneous(p, degree, images, ring, cache):
    monomials = ring.monomials_of_degree(degree)
    if not monomials:
        raise NotInvariant(p, f"(no monomial of weighted degree {degree})")
    columns = [monomial_image(exps, images, cache) for exps in monomials]
    keys = set(p.terms)
    for column in columns:
        keys.update(column.terms)
    keys = sorted(keys)
    rows = [[column.monomial_coeff(k) for column in columns] for k in keys]
    rhs = [p.monomial_coeff(k) for k in keys]
    try:
        solution = linsolve(rows, rhs, ncols=len(columns))
    except Inconsistent:
        raise NotInvariant(p, f"in terms of {', '.join(ring.names)}") from None
    if not solution.is_unique:
        logging.debug(
            "Images are dependent in degree %d, %d free parameters set to zero",
            degree,
            len(solution.nullspace),
        )
    return MPoly(ring, dict(zip(monomials, solution.particular)))


def express_in(p, images, ring, cache=None):
    """Write p as a polynomial q in ``ring`` with q(images) == p.

    The weights of ``ring`` must be the weighted degrees of the images.
    Each homogeneous component is matched against the ansatz of all
    monomials of its degree.
    """
    if cache is None:
        cache = {}
    result = ring.zero
    for degree, component in homogeneous_components(p):
        result = result + _express_homogeneous(component, degree, images, ring, cache)
    return result


def invariant_reduce(p, group):
    return express_in(p, group.invariants, group.x_ring, group.image_cache)


class InvarianceCheck(object):
    """Outcome of verify_invariance; falsy when a generator moves p."""

    def __init__(self, generator_index=None, generator=None, difference=None):
        self.generator_index = generator_index
        self.generator = generator
        self.difference = difference

    @property
    def holds(self):
        return self.generator is None

    def __bool__(self):
        return self.holds

    def __repr__(self):
        if self.holds:
            return "<InvarianceCheck holds>"
        return f"<InvarianceCheck fails at generator {self.generator_index}: {self.difference}>"


def verify_invariance(p, group):
    for index, g in enumerate(group.generators):
        difference = act(g, p) - p
        if not difference.is_zero():
            return InvarianceCheck(index, g, difference)
    return InvarianceCheck()


def semi_invariant_factor(g, p):
    """The scalar c with g.p = c p, or None if p is not semi-invariant under g."""
    image = act(g, p)
    exps, coeff = p.leading_term()
    factor = image.monomial_coeff(exps) / coeff
    if image == p * factor:
        return factor
    return None


def semi_invariant_project(z, table, character):
    """Average z against a character of the quotient listed in ``table``.

    ``character`` is an index into ``table.characters`` or a list of values,
    one per element of the table.
    """
    values = table.characters[character] if isinstance(character, int) else character
    total = z.ring.zero
    for g, value in zip(table.elements, values):
        total = total + act(g, z) * value.inverse()
    total = total / len(table.elements)
    if total.is_zero():
        raise ZeroProjection(z, character)
    return total
