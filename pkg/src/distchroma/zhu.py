"""Distance triples and Zhu's chromatic-number classification.

The integer distance graph on a set {a, b, c} of coprime positive
distances has chromatic number 2 when all three are odd, 4 when
(a, b) = (1, 2) with 3 | c or when a + b = c with a and b in different
residue classes mod 3, and 3 otherwise.  This module normalizes raw
triples, evaluates the classification with an explicit branch witness,
and orients triples for the relation-matrix pipeline.
"""

from dataclasses import dataclass
from enum import Enum
from itertools import permutations, product
from math import gcd

from .errors import InvalidInputError


class ChiBranch(Enum):
    """Which classification case produced the chromatic number."""

    ALL_ODD = "ALL_ODD"
    A1_B2_3DIVC = "A1_B2_3DIVC"
    SUM_NOT_CONG_MOD3 = "SUM_NOT_CONG_MOD3"
    OTHERWISE = "OTHERWISE"


@dataclass(frozen=True)
class DistanceTriple:
    """Normalized distance set: 1 <= a <= b <= c, coprime, with ``scale``
    recording the gcd divided out of the raw input."""

    a: int
    b: int
    c: int
    scale: int = 1

    def __post_init__(self):
        if not (1 <= self.a <= self.b <= self.c):
            raise InvalidInputError("distances must satisfy 1 <= a <= b <= c")
        if gcd(self.a, self.b, self.c) != 1:
            raise InvalidInputError("distances must be coprime; normalize first")
        if self.scale < 1:
            raise InvalidInputError("scale must be positive")

    def distances(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


def normalize_triple(raw_a: int, raw_b: int, raw_c: int) -> DistanceTriple:
    """Sort the raw distances and divide out their gcd.

    Scaling every distance by d splits the graph into d isomorphic copies,
    so the chromatic number depends only on the normalized triple.
    """
    for v in (raw_a, raw_b, raw_c):
        if v < 1:
            raise InvalidInputError("distances must be positive integers")
    g = gcd(raw_a, raw_b, raw_c)
    a, b, c = sorted(v // g for v in (raw_a, raw_b, raw_c))
    return DistanceTriple(a, b, c, scale=g)


def orient_for_matrix(t: DistanceTriple) -> tuple[int, int, int]:
    """Deterministic signed arrangement (a1, a2, a3) of the triple with
    3 | a1 + a2, -a1 <= a2 and |a1| <= |a2|.

    Among any three integers some pair has its sum or difference divisible
    by 3, so a valid arrangement always exists.  The scan order is fixed
    (descending value permutations, then sign patterns with + before -) so
    repeated runs build identical matrices.
    """
    for perm in permutations(sorted(t.distances(), reverse=True)):
        for signs in product((1, -1), repeat=3):
            a1, a2, a3 = (s * v for s, v in zip(signs, perm))
            if (a1 + a2) % 3 == 0 and -a1 <= a2 and abs(a1) <= abs(a2):
                return (a1, a2, a3)
    raise AssertionError("unreachable: a valid orientation always exists")


def chi_formula(t: DistanceTriple) -> tuple[int, ChiBranch]:
    """Chromatic number of the distance graph, with the branch that fired.

    The four cases are checked in a fixed order, so a triple matching more
    than one (such as (1, 2, 3)) reports the earliest branch.
    """
    a, b, c = t.distances()
    if a % 2 == b % 2 == c % 2 == 1:
        return (2, ChiBranch.ALL_ODD)
    if a == 1 and b == 2 and c % 3 == 0:
        return (4, ChiBranch.A1_B2_3DIVC)
    if a + b == c and a % 3 != b % 3:
        return (4, ChiBranch.SUM_NOT_CONG_MOD3)
    return (3, ChiBranch.OTHERWISE)


def is_bipartite(t: DistanceTriple) -> bool:
    """True when every distance is odd, so colors can alternate by parity.

    Equivalently: both column sums of the triple's relation matrix are even.
    """
    return all(v % 2 == 1 for v in t.distances())
