TETRAHEDRAL = ("G4", "G5", "G6", "G7")
OCTAHEDRAL = ("G8", "G9", "G10", "G11", "G12", "G13", "G14", "G15")
ICOSAHEDRAL = ("G16", "G17", "G18", "G19", "G20", "G21", "G22")
EXCEPTIONAL = TETRAHEDRAL + OCTAHEDRAL + ICOSAHEDRAL

# Exceptional groups of rank three and more
UNSUPPORTED = tuple(f"G{k}" for k in range(23, 38))

DUALITY_EXCEPTIONAL = (
    "G4",
    "G5",
    "G6",
    "G8",
    "G9",
    "G10",
    "G14",
    "G16",
    "G17",
    "G18",
    "G20",
    "G21",
)

# Discriminant monic of degree n + 1 in the first invariant
OVERDETERMINED = ("G12", "G13", "G22")

# Two basic invariants of the top degree
DOUBLE_TOP_DEGREE = ("G7", "G11", "G19")

COVERED_EXCEPTIONAL = ("G7", "G11", "G15", "G19")

MAX_MONOMIAL_RANK = 3

# Groups whose tables are regenerated by default
TABLE_MONOMIAL = tuple(f"G({m},1,2)" for m in range(2, 7)) + tuple(
    f"G({m},{m},2)" for m in range(3, 7)
)
TABLE_EXCEPTIONAL = ("G4", "G5", "G6", "G8", "G9", "G10", "G14", "G20")
TABLE_ICOSAHEDRAL = ("G16", "G17", "G18", "G21")
