"""Exact integer matrices that carry generator labels.

Questions about the infinite three-distance graph reduce to finite
circulants through transformations of a small relation matrix.  A
``LabeledMatrix`` couples the matrix with the images of the standard
generators under the defining group map (the label vector) and with the
modulus of the ambient group (0 for the integers, n >= 2 for Z_n).  The
defining invariant is that the label annihilates every column, so the
columns stay relations among the generator images and every transformation
here leaves the represented graph unchanged.  All arithmetic is exact.
"""

from dataclasses import dataclass
from math import gcd

from .errors import InvalidInputError, QuotientLoopsError


def _bezout(x: int, y: int) -> tuple[int, int]:
    # Iterative extended Euclid; returns some (u, v) with x*u + y*v = gcd > 0.
    r0, r1 = x, y
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0 < 0:
        s0, t0 = -s0, -t0
    return s0, t0


def egcd(x: int, y: int) -> tuple[int, int, int]:
    """Extended gcd with a canonical coefficient pair.

    Returns (g, u, v) with x*u + y*v == g == gcd(x, y) > 0.  The solution is
    pinned deterministically: v is the least-absolute-value residue modulo
    |x|/g (ties broken toward the positive representative) and u follows as
    (g - y*v) // x.  With y == 0 this degenerates to (|x|, sign(x), 0).
    """
    if x == 0 and y == 0:
        raise InvalidInputError("egcd(0, 0) is undefined")
    if x == 0:
        return (abs(y), 0, 1 if y > 0 else -1)
    g = gcd(x, y)
    _, v = _bezout(x, y)
    m = abs(x) // g
    v %= m
    if 2 * v > m:
        v -= m
    return (g, (g - y * v) // x, v)


def solve_bezout(a1: int, a2: int, a3: int) -> tuple[int, int, int]:
    """Solve a1*u + a2*v == a3*g for g = gcd(a1, a2).

    The equation has infinitely many solutions; scaling the canonical
    egcd coefficients by a3 picks one deterministically.  Returns (g, u, v).
    """
    g, u, v = egcd(a1, a2)
    return (g, a3 * u, a3 * v)


@dataclass(frozen=True)
class LabeledMatrix:
    """Integer matrix plus generator labels and ambient modulus.

    ``entries`` holds 2 or 3 row tuples of width 1 or 2, ``label`` gives the
    group image of each row's generator, and ``modulus`` is 0 over the
    integers or n >= 2 over Z_n (labels then reduced into [0, n)).
    Construction checks label annihilation: label . column == 0 modulo the
    modulus for every column.
    """

    entries: tuple[tuple[int, ...], ...]
    label: tuple[int, ...]
    modulus: int = 0

    def __post_init__(self):
        entries = tuple(tuple(int(e) for e in row) for row in self.entries)
        label = tuple(int(v) for v in self.label)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "label", label)
        if len(entries) not in (2, 3):
            raise InvalidInputError("matrix must have 2 or 3 rows")
        widths = {len(row) for row in entries}
        if len(widths) != 1 or widths.pop() not in (1, 2):
            raise InvalidInputError("matrix must have 1 or 2 columns of equal width")
        if len(label) != len(entries):
            raise InvalidInputError("label length must match the row count")
        if self.modulus < 0 or self.modulus == 1:
            raise InvalidInputError("modulus must be 0 or at least 2")
        if self.modulus and not all(0 <= v < self.modulus for v in label):
            raise InvalidInputError("labels must be reduced into [0, modulus)")
        for j, total in enumerate(self.label_column_products()):
            if (total if self.modulus == 0 else total % self.modulus) != 0:
                raise InvalidInputError(f"label does not annihilate column {j}")

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0])

    def label_column_products(self) -> tuple[int, ...]:
        """Raw dot products label . column, one per column, before reduction."""
        return tuple(
            sum(lab * row[j] for lab, row in zip(self.label, self.entries))
            for j in range(self.ncols)
        )

    def to_json_dict(self) -> dict:
        return {
            "entries": [list(row) for row in self.entries],
            "label": list(self.label),
            "modulus": self.modulus,
        }


def build_heuberger_matrix(a1: int, a2: int, a3: int) -> LabeledMatrix:
    """Relation matrix of the three-distance graph for an oriented triple.

    For nonzero a1, a2, a3 with gcd 1, returns the 3x2 matrix with rows
    (g, 0), (-v, -a1/g), (-u, a2/g) where g = gcd(a1, a2) and
    a1*u + a2*v = a3*g, labelled (a3, a2, a1) over the integers.  The first
    column is annihilated by that relation, the second identically.
    """
    if a1 == 0 or a2 == 0 or a3 == 0:
        raise InvalidInputError("oriented distances must be nonzero")
    if gcd(a1, a2, a3) != 1:
        raise InvalidInputError("oriented distances must be coprime")
    g, u, v = solve_bezout(a1, a2, a3)
    rows = ((g, 0), (-v, -(a1 // g)), (-u, a2 // g))
    return LabeledMatrix(rows, (a3, a2, a1), 0)


def col_combine(m: LabeledMatrix, src: int, dst: int, factor: int) -> LabeledMatrix:
    """Add ``factor`` times column ``src`` to column ``dst`` (0-based).

    A unimodular column move: the column span, the label, and the modulus
    are unchanged, so the represented graph is too.
    """
    if not (0 <= src < m.ncols and 0 <= dst < m.ncols):
        raise InvalidInputError("column index out of range")
    if src == dst:
        raise InvalidInputError("source and destination columns must differ")
    rows = tuple(
        tuple(e + factor * row[src] if j == dst else e for j, e in enumerate(row))
        for row in m.entries
    )
    return LabeledMatrix(rows, m.label, m.modulus)


def hermite_reduce_step(m: LabeledMatrix) -> tuple[int, int, LabeledMatrix]:
    """One division step toward the reduced (Hermite-style) column form.

    Requires the builder's shape: row one is (g, 0) and the column-two pivot
    sits at row two.  Writes entry (row 2, col 1) as q*pivot + r with the
    remainder window -|pivot| < r <= 0, then clears it to r by adding -q
    times column two to column one.  Returns (q, r, reduced_matrix).
    """
    if m.nrows != 3 or m.ncols != 2 or m.entries[0][1] != 0:
        raise InvalidInputError("matrix does not have the reduced builder shape")
    pivot = m.entries[1][1]
    if pivot == 0:
        raise InvalidInputError("zero pivot below the leading entry")
    below = m.entries[1][0]
    r = below % abs(pivot)
    if r:
        r -= abs(pivot)
    q = (below - r) // pivot
    return q, r, col_combine(m, src=1, dst=0, factor=-q)


def collapse_rows(m: LabeledMatrix, i: int, j: int, sign: int) -> LabeledMatrix:
    """Quotient an integer-labelled 3x2 matrix by merging rows i and j.

    Row i becomes row_i + sign*row_j and row j is deleted.  sign = -1
    (subtract) reduces the ambient group modulo label_i + label_j; sign = +1
    (add) reduces modulo |label_i - label_j|.  Surviving labels are reduced
    into [0, n); the result is the relation matrix of the circulant on Z_n
    with those labels.  Quotients that would place a loop on the graph are
    rejected: n < 2, or n dividing any label entry.
    """
    if m.nrows != 3 or m.modulus != 0:
        raise InvalidInputError("row collapse requires a 3-row matrix over the integers")
    if sign not in (-1, 1):
        raise InvalidInputError("sign must be -1 or +1")
    if i == j or not (0 <= i < 3 and 0 <= j < 3):
        raise InvalidInputError("row indices must be distinct and in range")
    n = abs(m.label[i] - sign * m.label[j])
    if n < 2:
        raise QuotientLoopsError(f"quotient modulus {n} is degenerate")
    for lab in m.label:
        if lab % n == 0:
            raise QuotientLoopsError(f"distance {lab} vanishes modulo {n}")
    rows = []
    labels = []
    for k in range(3):
        if k == j:
            continue
        if k == i:
            rows.append(tuple(a + sign * b for a, b in zip(m.entries[i], m.entries[j])))
        else:
            rows.append(m.entries[k])
        labels.append(m.label[k] % n)
    return LabeledMatrix(tuple(rows), tuple(labels), n)


def admissible_collapses(m: LabeledMatrix) -> list[tuple[int, int, int, LabeledMatrix]]:
    """Every loop-free row collapse of ``m`` as (i, j, sign, quotient)."""
    found = []
    for i in range(3):
        for j in range(i + 1, 3):
            for sign in (-1, 1):
                try:
                    found.append((i, j, sign, collapse_rows(m, i, j, sign)))
                except QuotientLoopsError:
                    continue
    return found
