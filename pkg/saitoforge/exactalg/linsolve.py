from ..exceptions import Inconsistent
from .cyclotomic import CycNum
from .matrix import MatrixR


class LinearSolution(object):
    """A particular solution together with a basis of the kernel."""

    def __init__(self, particular, nullspace):
        self.particular = particular
        self.nullspace = nullspace

    @property
    def is_unique(self):
        return not self.nullspace

    def __iter__(self):
        return iter(self.particular)

    def __repr__(self):
        return f"<LinearSolution particular={[str(v) for v in self.particular]} kernel={len(self.nullspace)}>"


def linsolve(rows, rhs, ncols=None):
    """Gauss-Jordan elimination over the cyclotomic numbers.

    ``rows`` is a MatrixR or a list of equal-length rows, possibly
    rectangular. Free variables of the particular solution are zero.
    """
    if isinstance(rows, MatrixR):
        rows = [list(r) for r in rows.rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if len(rhs) != len(rows):
        raise ValueError("Right hand side does not match the number of equations")
    augmented = [
        [CycNum.coerce(v) for v in row] + [CycNum.coerce(b)] for row, b in zip(rows, rhs)
    ]

    pivots = []
    rank = 0
    for column in range(ncols):
        pivot = next(
            (r for r in range(rank, len(augmented)) if not augmented[r][column].is_zero()),
            None,
        )
        if pivot is None:
            continue
        augmented[rank], augmented[pivot] = augmented[pivot], augmented[rank]
        scale = augmented[rank][column].inverse()
        augmented[rank] = [v * scale for v in augmented[rank]]
        for r, row in enumerate(augmented):
            if r != rank and not row[column].is_zero():
                factor = row[column]
                augmented[r] = [
                    v - factor * p if not p.is_zero() else v
                    for v, p in zip(row, augmented[rank])
                ]
        pivots.append(column)
        rank += 1

    for r in range(rank, len(augmented)):
        if not augmented[r][ncols].is_zero():
            raise Inconsistent(r)

    zero = CycNum.rational(0)
    particular = [zero] * ncols
    for r, column in enumerate(pivots):
        particular[column] = augmented[r][ncols]

    nullspace = []
    for free in range(ncols):
        if free in pivots:
            continue
        vector = [zero] * ncols
        vector[free] = CycNum.rational(1)
        for r, column in enumerate(pivots):
            vector[column] = -augmented[r][free]
        nullspace.append(vector)
    return LinearSolution(particular, nullspace)
