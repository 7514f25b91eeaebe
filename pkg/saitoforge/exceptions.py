class SaitoForgeError(Exception):
    pass


class DivisionByZero(SaitoForgeError, ZeroDivisionError):
    def __init__(self, value="0"):
        self.value = value
        Exception.__init__(self, f"Division by zero element {value}")


class NotDivisible(SaitoForgeError):
    def __init__(self, numerator, denominator):
        self.numerator = numerator
        self.denominator = denominator
        Exception.__init__(
            self, f"{numerator} is not divisible by {denominator} in the ring"
        )


class Inconsistent(SaitoForgeError):
    def __init__(self, row=None):
        self.row = row
        Exception.__init__(self, f"Linear system is inconsistent (pivot row {row})")


class UnsupportedGroup(SaitoForgeError):
    def __init__(self, name):
        self.name = name
        Exception.__init__(self, f"Reflection group {name} is not in the catalog")


class ReducibleGroup(SaitoForgeError):
    def __init__(self, name):
        self.name = name
        Exception.__init__(self, f"Reflection group {name} is reducible")


class NotInvariant(SaitoForgeError):
    def __init__(self, polynomial, reason=""):
        self.polynomial = polynomial
        Exception.__init__(
            self, f"{polynomial} is not a polynomial in the basic invariants {reason}"
        )


class ZeroProjection(SaitoForgeError):
    def __init__(self, polynomial, character):
        self.polynomial = polynomial
        self.character = character
        Exception.__init__(
            self, f"Averaging {polynomial} against character {character} gives zero"
        )


class FlatnessViolation(SaitoForgeError):
    def __init__(self, group, alpha, beta):
        self.group = group
        self.indices = (alpha, beta)
        Exception.__init__(
            self, f"Connection of {group} is not flat in directions ({alpha}, {beta})"
        )


class PropertyViolation(SaitoForgeError):
    def __init__(self, item, detail=""):
        self.item = item
        Exception.__init__(self, f"Property {item} does not hold {detail}".rstrip())


class AssumptionViolated(SaitoForgeError):
    def __init__(self, assumption, detail=""):
        self.assumption = assumption
        Exception.__init__(
            self, f"Assumption {assumption} is violated {detail}".rstrip()
        )


class NonIntegrable(SaitoForgeError):
    def __init__(self, row, column):
        self.entry = (row, column)
        Exception.__init__(
            self, f"Flat frame equation has no polynomial solution at ({row}, {column})"
        )


class SingularU(SaitoForgeError):
    def __init__(self):
        Exception.__init__(self, "Discriminant matrix U is singular")


class SingularTwist(SaitoForgeError):
    def __init__(self, parameter):
        self.parameter = parameter
        Exception.__init__(
            self, f"Twist endomorphism is identically singular for lambda={parameter}"
        )


class SingularP(SaitoForgeError):
    def __init__(self):
        Exception.__init__(self, "Endomorphism e*B is identically singular")


class NotRegular(SaitoForgeError):
    def __init__(self, field):
        self.field = field
        Exception.__init__(
            self, f"Pair (connection, {field}) is not regular: Q + e.Omega is singular"
        )


class NotEquivariant(SaitoForgeError):
    def __init__(self, covering, entry):
        self.covering = covering
        self.entry = entry
        Exception.__init__(
            self, f"Entry {entry} does not descend along the covering {covering}"
        )


class RegularityFailure(SaitoForgeError):
    def __init__(self, line):
        self.line = line
        Exception.__init__(self, f"Unit field line {line} is not regular")


class TableMismatch(SaitoForgeError):
    def __init__(self, row, entry, expected, actual):
        self.row = row
        self.entry = entry
        Exception.__init__(
            self,
            " ".join(
                (
                    f"Row {row} differs at {entry}:",
                    f"expected {expected},",
                    f"got {actual}",
                )
            ),
        )


class SchemaMismatch(SaitoForgeError):
    def __init__(self, found, expected):
        self.found = found
        Exception.__init__(
            self, f"Payload schema {found} does not match expected schema {expected}"
        )


class ParseError(SaitoForgeError, ValueError):
    def __init__(self, source, reason=""):
        self.source = source
        Exception.__init__(self, f"Unable to parse {source!r} {reason}".rstrip())


class UsageError(SaitoForgeError, ValueError):
    def __init__(self, message):
        Exception.__init__(self, message)
