import logging
import math
from functools import reduce

from sympy import QQ, Dummy, Poly

from .cyclotomic import CycNum

_VARIABLE = Dummy("a")


def _domain(order):
    if order == 1:
        return QQ
    return QQ.cyclotomic_field(order)


def _to_domain(value, order, domain):
    value = value.promote(order)
    if order == 1:
        return value.coeffs[0]
    return domain(list(reversed(value.coeffs)))


def _from_domain(element, order):
    if order == 1:
        return CycNum.rational(element)
    return CycNum(order, list(reversed(element.to_list())))


def _strip(coefficients):
    coefficients = [CycNum.coerce(c) for c in coefficients]
    while coefficients and coefficients[-1].is_zero():
        coefficients.pop()
    return coefficients


def univariate_common_roots(polynomials):
    """Common roots in a cyclotomic field of univariate polynomials.

    Each polynomial is a list of CycNum coefficients, lowest degree first.
    Zero polynomials are ignored; if every polynomial is zero the common
    zero set is the whole line and ValueError is raised. Roots come from the
    linear factors of the gcd over the smallest cyclotomic field holding all
    coefficients.
    """
    polynomials = [p for p in (_strip(q) for q in polynomials) if p]
    if not polynomials:
        raise ValueError("Every polynomial vanishes identically")
    if any(len(p) == 1 for p in polynomials):
        return []
    order = reduce(
        lambda a, b: a * b // math.gcd(a, b),
        (c.order for p in polynomials for c in p),
        1,
    )
    domain = _domain(order)
    converted = [
        Poly([_to_domain(c, order, domain) for c in reversed(p)], _VARIABLE, domain=domain)
        for p in polynomials
    ]
    common = reduce(lambda f, g: f.gcd(g), converted)
    if common.degree() <= 0:
        return []
    _, factors = common.factor_list()
    roots = []
    for factor, _ in factors:
        if factor.degree() != 1:
            logging.debug(
                "Skipping factor of degree %d over Q(zeta_%d)", factor.degree(), order
            )
            continue
        leading, constant = factor.rep.to_list()
        roots.append(_from_domain(domain.quo(-constant, leading), order))
    return roots
