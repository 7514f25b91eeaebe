from ..exactalg import CycNum
from . import generators as gen
from .invariants import act, express_in


class CharacterTable(object):
    """Characters of an abelian quotient G/K realised on K's basic invariants.

    Attributes:
        elements: coset representatives, identity first
        characters: per K-invariant, the list of values on ``elements``
        products: products[i][j] is the index of elements[i] * elements[j]
    """

    def __init__(self, elements, characters, products=None):
        self.elements = list(elements)
        self.characters = [list(values) for values in characters]
        self.products = products

    @property
    def order(self):
        return len(self.elements)

    def is_trivial(self, index):
        return all(value == 1 for value in self.characters[index])

    def is_multiplicative(self):
        if self.products is None:
            return True
        for values in self.characters:
            for i, a in enumerate(values):
                for j, b in enumerate(values):
                    if values[self.products[i][j]] != a * b:
                        return False
        return True

    def __repr__(self):
        return f"<CharacterTable order={self.order} characters={len(self.characters)}>"


def _coset_index(keys, key):
    for index, existing in enumerate(keys):
        if all(a == b for a, b in zip(existing, key)):
            return index
    return None


def quotient_table(group, subgroup):
    """Enumerate G/K by the action of G's generators on K's invariants.

    Two elements lie in the same coset exactly when they move every basic
    invariant of K the same way. The value of the character attached to
    z^alpha on g is the coefficient of z^alpha in g.z^alpha written in
    K's invariants.
    """
    identity = gen.identity(group.rank)
    elements = [identity]
    keys = [list(subgroup.invariants)]
    frontier = [identity]
    while frontier:
        following = []
        for element in frontier:
            for g in group.generators:
                candidate = element * g
                key = [act(candidate, z) for z in subgroup.invariants]
                if _coset_index(keys, key) is None:
                    elements.append(candidate)
                    keys.append(key)
                    following.append(candidate)
        frontier = following

    products = []
    for a in elements:
        row = []
        for b in elements:
            product = a * b
            row.append(_coset_index(keys, [act(product, z) for z in subgroup.invariants]))
        products.append(row)

    characters = []
    for alpha, z in enumerate(subgroup.invariants):
        unit = tuple(1 if k == alpha else 0 for k in range(subgroup.rank))
        values = []
        for key in keys:
            image = express_in(key[alpha], subgroup.invariants, subgroup.x_ring, subgroup.image_cache)
            values.append(image.monomial_coeff(unit) if image else CycNum.rational(0))
        characters.append(values)
    return CharacterTable(elements, characters, products)
