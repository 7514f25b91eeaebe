from ..exceptions import DivisionByZero, NotDivisible, ParseError
from .cyclotomic import CycNum


class PolyRing(object):
    """Polynomial ring over the cyclotomic numbers with a weighted grading.

    Two rings are equal when their variable names and weights agree.
    """

    def __init__(self, names, weights=None):
        self.names = tuple(names)
        if weights is None:
            weights = [1] * len(self.names)
        self.weights = tuple(int(w) for w in weights)
        if len(self.weights) != len(self.names):
            raise ValueError("One weight per variable is required")
        if any(w <= 0 for w in self.weights):
            raise ValueError(f"Weights must be positive, got {self.weights}")
        self.ngens = len(self.names)

    def __eq__(self, other):
        if not isinstance(other, PolyRing):
            return NotImplemented
        return self.names == other.names and self.weights == other.weights

    def __hash__(self):
        return hash((self.names, self.weights))

    def __repr__(self):
        return f"PolyRing({list(self.names)}, {list(self.weights)})"

    def index(self, name):
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"No variable {name} in {self}") from None

    def wdeg(self, exps):
        return sum(w * e for w, e in zip(self.weights, exps))

    def term_key(self, exps):
        """Graded-lex key of a monomial."""
        return (self.wdeg(exps), exps)

    @property
    def zero(self):
        return MPoly(self, {})

    @property
    def one(self):
        return self.constant(1)

    def constant(self, value):
        value = CycNum.coerce(value)
        if value.is_zero():
            return self.zero
        return MPoly(self, {(0,) * self.ngens: value})

    def monomial(self, exps, coeff=1):
        exps = tuple(int(e) for e in exps)
        coeff = CycNum.coerce(coeff)
        if coeff.is_zero():
            return self.zero
        return MPoly(self, {exps: coeff})

    def gen(self, i):
        exps = [0] * self.ngens
        exps[i] = 1
        return self.monomial(exps)

    def gens(self):
        return [self.gen(i) for i in range(self.ngens)]

    def monomials_of_degree(self, degree):
        """All exponent vectors of the given weighted degree, graded-lex descending."""
        result = []

        def extend(prefix, position, remaining):
            if position == self.ngens:
                if remaining == 0:
                    result.append(tuple(prefix))
                return
            weight = self.weights[position]
            for e in range(remaining // weight, -1, -1):
                prefix.append(e)
                extend(prefix, position + 1, remaining - e * weight)
                prefix.pop()

        if degree >= 0:
            extend([], 0, degree)
        return result

    @property
    def data(self):
        return {"names": list(self.names), "weights": list(self.weights)}

    def serializable_data(self):
        return self.data

    @classmethod
    def from_data(cls, data):
        try:
            return cls(data["names"], data["weights"])
        except (KeyError, TypeError) as error:
            raise ParseError(data, "as a polynomial ring") from error


def _add_exps(a, b):
    return tuple(x + y for x, y in zip(a, b))


class MPoly(object):
    """Sparse polynomial: a map from exponent vectors to nonzero CycNum."""

    __slots__ = ("ring", "terms")
    __hash__ = None

    def __init__(self, ring, terms=None):
        self.ring = ring
        self.terms = {}
        if terms:
            for exps, coeff in terms.items():
                if not coeff.is_zero():
                    self.terms[exps] = coeff

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.ring != self.ring:
                raise ValueError(f"Ring mismatch: {self.ring} and {other.ring}")
            return other
        try:
            return self.ring.constant(other)
        except TypeError:
            return None

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return not self.terms or (
            len(self.terms) == 1 and not any(next(iter(self.terms)))
        )

    def constant_value(self):
        return self.terms.get((0,) * self.ring.ngens, CycNum.rational(0))

    def __len__(self):
        return len(self.terms)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            current = terms.get(exps)
            if current is None:
                terms[exps] = coeff
            else:
                value = current + coeff
                if value.is_zero():
                    del terms[exps]
                else:
                    terms[exps] = value
        return MPoly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (CycNum, int)) or not hasattr(other, "ring"):
            try:
                scalar = CycNum.coerce(other)
            except TypeError:
                return NotImplemented
            if scalar.is_zero():
                return self.ring.zero
            return MPoly(self.ring, {e: c * scalar for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = _add_exps(e1, e2)
                current = terms.get(exps)
                product = c1 * c2
                terms[exps] = product if current is None else current + product
        return MPoly(self.ring, terms)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        if isinstance(other, MPoly):
            return self.exact_div(other)
        try:
            scalar = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        return self * scalar.inverse()

    def __pow__(self, exponent):
        exponent = int(exponent)
        if exponent < 0:
            raise ValueError("Negative powers of polynomials are rational functions")
        result, base = self.ring.one, self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.ring == other.ring and self.terms == other.terms
        try:
            other = self.ring.constant(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def diff(self, i):
        terms = {}
        for exps, coeff in self.terms.items():
            if exps[i]:
                lowered = list(exps)
                lowered[i] -= 1
                terms[tuple(lowered)] = coeff * exps[i]
        return MPoly(self.ring, terms)

    def degree(self, i):
        """Degree in variable i, -1 for the zero polynomial."""
        return max((exps[i] for exps in self.terms), default=-1)

    def coeff(self, i, k):
        """Coefficient of the k-th power of variable i, still in this ring."""
        terms = {}
        for exps, c in self.terms.items():
            if exps[i] == k:
                lowered = list(exps)
                lowered[i] = 0
                terms[tuple(lowered)] = c
        return MPoly(self.ring, terms)

    def monomial_coeff(self, exps):
        return self.terms.get(tuple(exps), CycNum.rational(0))

    def weighted_degree(self):
        """Largest weighted degree of a term, -1 for the zero polynomial."""
        return max((self.ring.wdeg(e) for e in self.terms), default=-1)

    def is_homogeneous(self):
        return len({self.ring.wdeg(e) for e in self.terms}) <= 1

    def leading_term(self):
        if not self.terms:
            raise DivisionByZero(self)
        exps = max(self.terms, key=self.ring.term_key)
        return exps, self.terms[exps]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: self.ring.term_key(t[0]), reverse=True)

    def map_coefficients(self, function):
        return MPoly(self.ring, {e: function(c) for e, c in self.terms.items()})

    def compose(self, images):
        """Substitute images[i] for variable i; all images share one ring."""
        if len(images) != self.ring.ngens:
            raise ValueError("One image per variable is required")
        target = images[0].ring
        powers = [{0: target.one} for _ in images]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * images[i]
            return cache[k]

        result = target.zero
        for exps, coeff in self.terms.items():
            term = target.constant(coeff)
            for i, k in enumerate(exps):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def embed(self, ring, positions=None):
        """The same polynomial in a ring with more variables."""
        if positions is None:
            positions = [ring.index(name) for name in self.ring.names]
        terms = {}
        for exps, coeff in self.terms.items():
            lifted = [0] * ring.ngens
            for k, p in zip(exps, positions):
                lifted[p] = k
            terms[tuple(lifted)] = coeff
        return MPoly(ring, terms)

    def exact_div(self, other):
        """Quotient q with q * other == self, or NotDivisible."""
        if other.is_zero():
            raise DivisionByZero(other)
        if other.is_constant():
            return self * other.constant_value().inverse()
        key = self.ring.term_key
        lead_exps, lead_coeff = other.leading_term()
        lead_inverse = lead_coeff.inverse()
        divisor = [(e, c) for e, c in other.terms.items() if e != lead_exps]
        remainder = dict(self.terms)
        quotient = {}
        while remainder:
            exps = max(remainder, key=key)
            shift = tuple(a - b for a, b in zip(exps, lead_exps))
            if min(shift) < 0:
                raise NotDivisible(self, other)
            factor = remainder.pop(exps) * lead_inverse
            quotient[shift] = factor
            for e, c in divisor:
                target = _add_exps(e, shift)
                product = factor * c
                current = remainder.get(target)
                if current is None:
                    remainder[target] = -product
                else:
                    value = current - product
                    if value.is_zero():
                        del remainder[target]
                    else:
                        remainder[target] = value
        return MPoly(self.ring, quotient)

    def divides(self, other):
        try:
            other.exact_div(self)
        except NotDivisible:
            return False
        return True

    def __repr__(self):
        return f"MPoly({self.ring!r}, {str(self)!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            factors = []
            for name, k in zip(self.ring.names, exps):
                if k == 1:
                    factors.append(name)
                elif k:
                    factors.append(f"{name}^{k}")
            monomial = "*".join(factors)
            if not monomial:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(monomial)
            elif coeff == -1:
                parts.append(f"-{monomial}")
            else:
                parts.append(f"{coeff}*{monomial}")
        return " + ".join(parts).replace("+ -", "- ")

    @property
    def data(self):
        return [
            {"exps": list(exps), "coeff": coeff.serializable_data()}
            for exps, coeff in self.sorted_terms()
        ]

    def serializable_data(self):
        return self.data

    @classmethod
    def from_data(cls, ring, data):
        try:
            terms = {
                tuple(int(e) for e in item["exps"]): CycNum.from_data(item["coeff"])
                for item in data
            }
        except (KeyError, TypeError) as error:
            raise ParseError(data, "as a polynomial") from error
        if any(len(exps) != ring.ngens for exps in terms):
            raise ParseError(data, f"with {ring.ngens} variables")
        return cls(ring, terms)


def poly_exact_div(num, den):
    return num.exact_div(den)
