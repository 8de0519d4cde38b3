"""Dissections of a convex polygon into (m+2)-gons: validation, enumeration,
flips, cutting and gluing.

An M-angulation of size n is a set of n-1 pairwise non-crossing diagonals
cutting the (m*n+2)-gon into n regions with m+2 sides each.  Vertices are
numbered 0..m*n+1 counter-clockwise; vertex 0 is the apex.  The fan (all
diagonals through the apex) is the base point of every construction here:
flips of shared fan diagonals generate the order studied in `poset`, and
cutting along shared fan diagonals reduces a dissection to final pieces.

Labelled vertices: vertex i >= 1 carries the letter ((i-2) mod m) + 1, so the
letters 1..m repeat counter-clockwise and both neighbours of the apex carry
the last letter.
"""

from functools import lru_cache
from itertools import chain, combinations, product

from .errors import (
    ArityMismatch,
    MalformedDissection,
    NotAQ0Diagonal,
    NotFinal,
    SizeGuardExceeded,
)

#: Default ceiling on m*n for exhaustive enumerations.
DEFAULT_MAX_MN = 16

Chord = tuple[int, int]


def chords_cross(c1: Chord, c2: Chord) -> bool:
    """True iff two chords (a, b) with a < b cross in the open disk.

    Chords sharing an endpoint never cross.
    """
    a1, b1 = c1
    a2, b2 = c2
    return a1 < a2 < b1 < b2 or a2 < a1 < b2 < b1


def vertex_label(m: int, i: int) -> int:
    """Letter (1..m) of vertex i >= 1.  The apex itself carries no letter."""
    if i < 1:
        raise ValueError("the apex carries no letter")
    return (i - 2) % m + 1


class Dissection:
    """An M-angulation, stored canonically as a sorted tuple of diagonals.

    Equality, hashing and ordering all go through (m, n, diagonals), so the
    canonical storage doubles as the identity key.  Use :meth:`new` to
    normalize and validate chord data from outside.
    """

    __slots__ = ("m", "n", "diagonals")

    def __init__(self, m: int, n: int, diagonals: tuple[Chord, ...]):
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "diagonals", diagonals)

    def __setattr__(self, name, value):
        raise AttributeError("Dissection is immutable")

    def _key(self):
        return (self.m, self.n, self.diagonals)

    def __eq__(self, other):
        return isinstance(other, Dissection) and self._key() == other._key()

    def __lt__(self, other):
        return self._key() < other._key()

    def __le__(self, other):
        return self._key() <= other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"Dissection(m={self.m}, n={self.n}, diagonals={self.diagonals})"

    @classmethod
    def new(cls, m: int, n: int, chords) -> "Dissection":
        """Normalize, validate and return a dissection."""
        q = cls(m, n, tuple(sorted((a, b) for a, b in chords)))
        validate(q)
        return q

    @property
    def num_vertices(self) -> int:
        return self.m * self.n + 2

    @property
    def rank(self) -> int:
        """Number of diagonals avoiding the apex (= rank in the flip order).

        Any valid diagonal through the apex is a fan diagonal, so counting
        nonzero first endpoints is exact.
        """
        return sum(1 for a, _ in self.diagonals if a != 0)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "diagonals": [list(d) for d in self.diagonals],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Dissection":
        return cls.new(data["m"], data["n"], (tuple(d) for d in data["diagonals"]))


def _walk_regions(q: Dissection) -> list[tuple[int, ...]]:
    # Peel off the region hugging the closing chord of each sub-polygon: from
    # vertex u the next region vertex is the farthest chord endpoint <= hi
    # (the closing chord itself excluded), else u+1.  Non-crossing chords make
    # the walk well defined; it terminates because u strictly increases.
    top = q.m * q.n + 1
    ends: dict[int, list[int]] = {}
    for a, b in q.diagonals:
        ends.setdefault(a, []).append(b)
    for a in ends:
        ends[a].sort(reverse=True)
    regs = []
    stack = [(0, top)]
    while stack:
        lo, hi = stack.pop()
        cycle = [lo]
        u = lo
        while u != hi:
            nxt = u + 1
            for b in ends.get(u, ()):
                if b <= hi and not (u == lo and b == hi):
                    nxt = b
                    break
            cycle.append(nxt)
            u = nxt
        regs.append(tuple(cycle))
        for x, y in zip(cycle, cycle[1:]):
            if y - x >= 2:
                stack.append((x, y))
    regs.sort()
    return regs


def regions(q: Dissection) -> list[tuple[int, ...]]:
    """The n regions, each as its ascending (= counter-clockwise) vertex
    cycle, sorted by smallest vertex.

    Raises MalformedDissection unless q is a valid M-angulation, so this
    doubles as the validator.
    """
    m, n = q.m, q.n
    if m < 1 or n < 1:
        raise MalformedDissection(f"need m, n >= 1, got m={m}, n={n}")
    top = m * n + 1
    if len(q.diagonals) != n - 1:
        raise MalformedDissection(
            f"{len(q.diagonals)} diagonals, a size-{n} dissection needs {n - 1}"
        )
    prev = None
    for d in q.diagonals:
        a, b = d
        if not (0 <= a < b <= top) or b - a < 2 or (a, b) == (0, top):
            raise MalformedDissection(f"{d} is not a diagonal of the {top + 1}-gon")
        if (b - a) % m != 1 % m:
            raise MalformedDissection(f"{d} spans {b - a} != 1 (mod {m}) boundary steps")
        if prev is not None and d <= prev:
            raise MalformedDissection("diagonals not strictly sorted")
        prev = d
    for c1, c2 in combinations(q.diagonals, 2):
        if chords_cross(c1, c2):
            raise MalformedDissection(f"{c1} crosses {c2}")
    regs = _walk_regions(q)
    if len(regs) != n or any(len(r) != m + 2 for r in regs):
        raise MalformedDissection(
            f"regions have sizes {sorted(len(r) for r in regs)}, want {n} of size {m + 2}"
        )
    return regs


def validate(q: Dissection) -> None:
    """Raise MalformedDissection unless every invariant holds."""
    regions(q)


def is_final(q: Dissection) -> bool:
    """True iff q shares no diagonal with the fan."""
    return all(a != 0 for a, _ in q.diagonals)


@lru_cache(maxsize=None)
def make_q0(m: int, n: int) -> Dissection:
    """The fan: diagonals (0, m*k+1) for k = 1..n-1, the flip-order minimum."""
    return Dissection.new(m, n, [(0, m * k + 1) for k in range(1, n)])


def apex_region(q: Dissection) -> tuple[int, ...]:
    """The region containing the apex; well defined only when q is final."""
    if not is_final(q):
        raise NotFinal("the apex region is only unique for final dissections")
    regs = regions(q)
    r0 = regs[0]
    assert r0[0] == 0
    return r0


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


@lru_cache(maxsize=None)
def _arc_fillings(m: int, gap: int) -> tuple[tuple[Chord, ...], ...]:
    # All chord sets dissecting the sub-polygon 0..gap (closed by the chord or
    # side (0, gap)) into (m+2)-gons.  gap == 1 (mod m) always.
    if gap == 1:
        return ((),)
    free = (gap - 1) // m - 1  # regions left after the one hugging (0, gap)
    out = []
    for comp in _compositions(free, m + 1):
        cuts = [0]
        for a in comp:
            cuts.append(cuts[-1] + m * a + 1)
        side_chords = tuple(
            (x, y) for x, y in zip(cuts, cuts[1:]) if y - x >= 2
        )
        gap_choices = [
            tuple(
                tuple((a + x, b + x) for a, b in filling)
                for filling in _arc_fillings(m, y - x)
            )
            for x, y in zip(cuts, cuts[1:])
        ]
        for pieces in product(*gap_choices):
            out.append(side_chords + tuple(chain.from_iterable(pieces)))
    return tuple(out)


def enumerate_dissections(m: int, n: int, max_mn: int = DEFAULT_MAX_MN) -> list[Dissection]:
    """All M-angulations of the (m*n+2)-gon, in canonical order.

    There are C((m+1)n, n)/(mn+1) of them (Fuss-Catalan).  Guarded: raises
    SizeGuardExceeded when m*n > max_mn.
    """
    if m < 1 or n < 1:
        raise ValueError(f"need m, n >= 1, got m={m}, n={n}")
    if m * n > max_mn:
        raise SizeGuardExceeded(f"m*n = {m * n} exceeds the guard {max_mn}")
    quads = [
        Dissection(m, n, tuple(sorted(ch))) for ch in _arc_fillings(m, m * n + 1)
    ]
    quads.sort()
    return quads


def flip_up(q: Dissection, d: Chord) -> list[Dissection]:
    """The m dissections obtained by re-cutting the (2m+2)-gon exposed by
    removing the shared fan diagonal d.

    The merged polygon c_0 < ... < c_{2m+1} admits m+1 long chords
    (c_i, c_{i+m+1}); one of them is d itself, the other m give the results
    (each covers q in the flip order).  Results come sorted by new chord.
    """
    d = (d[0], d[1])
    if d not in q.diagonals or d[0] != 0:
        raise NotAQ0Diagonal(f"{d} is not a shared fan diagonal")
    adj = [r for r in regions(q) if d[0] in r and d[1] in r]
    assert len(adj) == 2, "a diagonal bounds exactly two regions"
    merged = sorted(set(adj[0]) | set(adj[1]))
    span = q.m + 1
    assert len(merged) == 2 * span and (merged[0], merged[span]) == d
    rest = set(q.diagonals) - {d}
    out = []
    for i in range(span):
        chord = (merged[i], merged[i + span])
        if chord != d:
            out.append(Dissection.new(q.m, q.n, rest | {chord}))
    return out


def cut_L(q: Dissection) -> list[Dissection]:
    """Cut along the shared fan diagonals; pieces in counter-clockwise order.

    Each piece keeps the apex as its own vertex 0 and re-indexes its arc from
    1; every piece is final.  A final q yields [q] itself.
    """
    m = q.m
    bounds = [1] + [b for a, b in q.diagonals if a == 0] + [q.num_vertices - 1]
    pieces = []
    for lo, hi in zip(bounds, bounds[1:]):
        chords = [
            (a - lo + 1, b - lo + 1)
            for a, b in q.diagonals
            if lo <= a and b <= hi
        ]
        pieces.append(Dissection.new(m, (hi - lo) // m, chords))
    return pieces


def _glue_frame(m: int, parts: list[Dissection]) -> tuple[list[Chord], list[int]]:
    # Embed the pieces side by side (piece i's arc re-indexed after piece
    # i-1's, consecutive pieces sharing the cut vertex) WITHOUT drawing the
    # cut diagonals, and return the cycle of the (m*k+2)-gon this leaves
    # around the apex: the apex regions of the pieces merged along the cuts.
    chords: list[Chord] = []
    cycle = [0]
    offset = 0
    for i, p in enumerate(parts):
        if p.m != m:
            raise ArityMismatch(f"piece has m={p.m}, expected {m}")
        if not is_final(p):
            raise NotFinal("glue parts must be final dissections")
        chords.extend((a + offset, b + offset) for a, b in p.diagonals)
        rim = [v + offset for v in apex_region(p)[1:]]
        cycle.extend(rim if i == 0 else rim[1:])
        offset += m * p.n
    assert len(cycle) == m * len(parts) + 2
    return chords, cycle


def glue_G(b0: Dissection, parts: list[Dissection]) -> Dissection:
    """Glue the final pieces around the apex and dissect the exposed
    (m*k+2)-gon by a copy of b0.

    Inverse of cut_L when b0 is the fan: glue_G(fan, cut_L(q)) == q.
    """
    if len(parts) != b0.n:
        raise ArityMismatch(f"b0 has {b0.n} regions but {len(parts)} parts given")
    chords, cycle = _glue_frame(b0.m, parts)
    chords.extend((cycle[a], cycle[b]) for a, b in b0.diagonals)
    return Dissection.new(b0.m, sum(p.n for p in parts), chords)


def width_and_blocks(q: Dissection) -> tuple[int, list[Dissection]]:
    """Polygon pieces left when the apex region of a final dissection is
    removed, preceded by their number (the width, between 0 and m).

    Each block is re-indexed with its smaller attachment vertex as apex.
    Width 0 happens exactly for n = 1.
    """
    r0 = apex_region(q)  # raises NotFinal
    blocks = []
    for u, w in zip(r0[1:], r0[2:]):
        if w - u >= 2:
            chords = [
                (a - u, b - u)
                for a, b in q.diagonals
                if u <= a and b <= w and (a, b) != (u, w)
            ]
            blocks.append(Dissection.new(q.m, (w - u - 1) // q.m, chords))
    return len(blocks), blocks


def apex_diagonal_set_D(q: Dissection) -> frozenset[Chord]:
    """Chords from the apex to the non-neighbour vertices of its region.

    For a final dissection these m-1 chords lie inside the apex region, so
    they cross no diagonal of q and belong to none; they are the cutting
    lines of the width factorization.
    """
    r0 = apex_region(q)
    out = frozenset((0, u) for u in r0[2:-1])
    assert not (out & set(q.diagonals))
    assert not any(chords_cross(c, d) for c in out for d in q.diagonals)
    return out


def reflect(q: Dissection) -> Dissection:
    """Mirror image fixing the apex: vertex i -> (m*n+2-i) mod (m*n+2)."""
    size = q.num_vertices
    chords = []
    for a, b in q.diagonals:
        x, y = (size - a) % size, (size - b) % size
        chords.append((min(x, y), max(x, y)))
    return Dissection.new(q.m, q.n, chords)
