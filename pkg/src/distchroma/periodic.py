"""Periodic colorings of the three-distance graph on the integers.

A color word w of length p colors vertex n with w[n mod p]; it is proper
exactly when w[i] != w[(i + s) mod p] for every residue i and distance s.
Such colorings are pullbacks, along reduction mod p, of colorings of the
circulant on Z_p with the distances as connection set.  The constructor
exploits that: it tries quotient moduli given by pair sums and differences
of the distances (the moduli realized by row collapses of the relation
matrix), then every remaining loop-free modulus up to b + c.

A certificate bundles the classification answer with re-verified witnesses
in both directions: a periodic coloring for the upper bound, and a parity
argument or an exhaustively uncolorable segment for the lower bound.
"""

from dataclasses import dataclass

from .circulant import backtrack_coloring, exists_coloring, make_circulant
from .errors import CertificationError
from .zhu import ChiBranch, DistanceTriple, chi_formula, is_bipartite

LOWER_TRIVIAL = "trivial"
LOWER_PARITY = "parity"
LOWER_SEGMENT = "segment"

# Segment lengths are scanned from b+c, doubling, up to this multiple of
# b+c; an uncolorable segment has always appeared well before the cap on
# every swept instance, and running past it aborts rather than guessing.
SEGMENT_CAP_FACTOR = 6


@dataclass(frozen=True)
class PeriodicColoring:
    """Finite color word encoding a coloring of the integers by residue."""

    period: int
    colors: tuple[int, ...]
    k: int
    modulus_origin: int  # quotient modulus that produced the word; equals period

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))


@dataclass(frozen=True)
class LowerBound:
    """Machine-checkable reason the chromatic number is not smaller.

    kind "trivial": the graph has an edge, so one color cannot suffice.
    kind "parity": not every distance is odd, which yields an odd closed
    walk, so two colors cannot suffice.
    kind "segment": the vertices 0..length admit no coloring with one color
    fewer, established by exhausted search.
    """

    kind: str
    length: "int | None" = None


@dataclass(frozen=True)
class ChiCertificate:
    """Chromatic number with witnesses for both bounds."""

    triple: DistanceTriple
    chi: int
    branch: ChiBranch
    upper: PeriodicColoring
    lower: LowerBound

    def to_json_dict(self) -> dict:
        out = {
            "a": self.triple.a,
            "b": self.triple.b,
            "c": self.triple.c,
            "scale": self.triple.scale,
            "chi": self.chi,
            "branch": self.branch.value,
            "period": self.upper.period,
            "colors": list(self.upper.colors),
            "lower": {"type": self.lower.kind},
        }
        if self.lower.length is not None:
            out["lower"]["L"] = self.lower.length
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "ChiCertificate":
        triple = DistanceTriple(data["a"], data["b"], data["c"], data["scale"])
        upper = PeriodicColoring(
            period=data["period"],
            colors=tuple(data["colors"]),
            k=data["chi"],
            modulus_origin=data["period"],
        )
        lower = LowerBound(data["lower"]["type"], data["lower"].get("L"))
        return cls(triple, data["chi"], ChiBranch(data["branch"]), upper, lower)


def candidate_moduli(t: DistanceTriple) -> list[int]:
    """Quotient moduli to try, most promising first.

    Pair sums and differences of the distances come first in ascending
    order; row collapses of the relation matrix show that a coloring with
    one of those periods always exists at the chromatic number.  Every
    other loop-free modulus up to b + c follows as a fallback so the
    search is total.  A modulus m is loop-free when no distance vanishes
    mod m.
    """
    a, b, c = t.distances()
    pair_values = {a + b, a + c, b + c, b - a, c - a, c - b}

    def loop_free(m: int) -> bool:
        return all(v % m != 0 for v in (a, b, c))

    primary = sorted(m for m in pair_values if m >= 2 and loop_free(m))
    fallback = [
        m for m in range(2, b + c + 1) if m not in pair_values and loop_free(m)
    ]
    return primary + fallback


def find_periodic_coloring(t: DistanceTriple, k: int) -> "PeriodicColoring | None":
    """First periodic k-coloring found over the candidate moduli.

    A proper coloring of the circulant on Z_m with connection set
    {a, b, c} pulls back to a proper coloring of the integers with period
    m, so any result is sound.  Returns None when every candidate fails,
    which for k below the chromatic number is guaranteed.
    """
    for m in candidate_moduli(t):
        witness = exists_coloring(make_circulant(m, list(t.distances())), k)
        if witness is not None:
            return PeriodicColoring(period=m, colors=witness.colors, k=k, modulus_origin=m)
    return None


def word_is_proper(distances: tuple[int, ...], colors: tuple[int, ...]) -> bool:
    """Properness of the periodic coloring a color word induces on the
    integers, checked over one period."""
    p = len(colors)
    return all(colors[i] != colors[(i + s) % p] for i in range(p) for s in distances)


def verify_periodic(t: DistanceTriple, pc: PeriodicColoring) -> bool:
    """Independent properness check of a periodic coloring for the triple.

    One period suffices: vertices n and n + s collide exactly when the
    residues i and (i + s) mod p do.  A distance divisible by the period
    compares a color with itself and fails, so loop-freeness needs no
    separate check.
    """
    if len(pc.colors) != pc.period or pc.period < 1:
        return False
    return word_is_proper(t.distances(), pc.colors)


def segment_colorable(t: DistanceTriple, length: int, k: int) -> bool:
    """Whether vertices 0..length with the triple's distances admit a
    proper k-coloring, by exact backtracking with vertex 0 pinned.

    Any induced finite subgraph bounds the chromatic number of the whole
    graph from below; an uncolorable segment is therefore a lower-bound
    witness.
    """
    adjacency = [[] for _ in range(length + 1)]
    for v in range(length + 1):
        for s in set(t.distances()):
            if v + s <= length:
                adjacency[v].append(v + s)
                adjacency[v + s].append(v)
    return backtrack_coloring(adjacency, k) is not None


def certify(t: DistanceTriple) -> ChiCertificate:
    """Classify the triple and wrap the answer in re-verified witnesses.

    The upper witness is a periodic chi-coloring with period at most
    b + c; the lower witness rules out chi - 1 colors (trivially for
    chi = 2, by parity for chi = 3, by an uncolorable segment for
    chi = 4).  Failure of either search would contradict the
    classification, so it raises CertificationError rather than degrade.
    """
    chi, branch = chi_formula(t)
    a, b, c = t.distances()

    upper = find_periodic_coloring(t, chi)
    if upper is None or upper.period > b + c:
        raise CertificationError(
            f"no periodic {chi}-coloring with period <= {b + c} for {t.distances()}"
        )
    if not verify_periodic(t, upper):
        raise CertificationError(
            f"periodic coloring failed re-verification for {t.distances()}"
        )

    if chi == 2:
        lower = LowerBound(LOWER_TRIVIAL)
    elif chi == 3:
        if is_bipartite(t):
            raise CertificationError(
                f"parity lower bound unsound for {t.distances()}"
            )
        lower = LowerBound(LOWER_PARITY)
    else:
        cap = SEGMENT_CAP_FACTOR * (b + c)
        length = b + c
        while segment_colorable(t, length, chi - 1):
            if length >= cap:
                raise CertificationError(
                    f"no uncolorable segment up to {cap} for {t.distances()}"
                )
            length = min(2 * length, cap)
        lower = LowerBound(LOWER_SEGMENT, length)

    return ChiCertificate(t, chi, branch, upper, lower)
