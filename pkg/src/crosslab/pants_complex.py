"""Combinatorial model of the square-tiled pair of pants.

The surface is a right-angled hexagon built from six half-unit squares,
doubled along alternating sides.  Its spine is a two-vertex ribbon graph:
a front vertex F and a back vertex B joined by three interior edges 1, 2, 3
of length one, plus a half-edge stub of length one half from each vertex to
each cuff.  Cone angles at F and B are 3*pi, so geodesic paths never turn by
less than pi: closed geodesics are cyclic words over {1,2,3} with cyclically
distinct neighbours, and geodesic arcs are (half-edge, word, half-edge)
triples whose first and last interior steps are the straight continuations
of their stubs.

All turn and face semantics are derived from the two ribbon cycles below;
nothing else in the package hard-codes the cyclic orders.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

EDGES = (1, 2, 3)
FRONT = "F"
BACK = "B"

# Cyclic order of edge ends and cuff stubs around each singular point, fixed
# once at build time.  The back cycle is the exact mirror of the front one;
# mirroring is forced: it makes the spine planar with three boundary faces
# and puts f_i and b_i on the same face (the same cuff).
FRONT_RIBBON = (("e", 1), ("h", "f1"), ("e", 2), ("h", "f2"), ("e", 3), ("h", "f3"))
BACK_RIBBON = (("e", 1), ("h", "b3"), ("e", 3), ("h", "b2"), ("e", 2), ("h", "b1"))

HALF_EDGES = ("f1", "f2", "f3", "b1", "b2", "b3")
DEFAULT_CENSUS_CAP = 2 ** 24
CAP_ENV_VAR = "CROSSLAB_CAP"


class PantsError(ValueError):
    """Base class for invalid curve/arc data."""


class InvalidLabel(PantsError):
    pass


class EmptyWord(PantsError):
    pass


class Backtracking(PantsError):
    pass


class OddLength(PantsError):
    pass


class NonPrimitive(PantsError):
    pass


class NotGeodesic(PantsError):
    """Arc data whose entry or exit step is not the straight continuation."""


class CensusCapExceeded(RuntimeError):
    """An enumeration would materialize more classes than the configured cap."""


def census_cap() -> int:
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_CENSUS_CAP
    cap = int(raw)
    if cap <= 0:
        raise ValueError(f"{CAP_ENV_VAR} must be positive, got {raw}")
    return cap


def vertex_of(half_edge: str) -> str:
    if half_edge not in HALF_EDGES:
        raise InvalidLabel(f"unknown half-edge {half_edge!r}")
    return FRONT if half_edge[0] == "f" else BACK


def flip(vtype: str) -> str:
    return BACK if vtype == FRONT else FRONT


def _ribbon(vtype: str):
    return FRONT_RIBBON if vtype == FRONT else BACK_RIBBON


def _derive_straight():
    # A geodesic through a 3*pi cone point needs angle >= pi on both sides.
    # Slots are pi/2 apart, so the admissible continuations sit 2, 3 or 4
    # slots away; slot +3 is the unique one of opposite kind (edge vs stub).
    table = {}
    for vtype in (FRONT, BACK):
        ribbon = _ribbon(vtype)
        for idx, item in enumerate(ribbon):
            table[(vtype, item)] = ribbon[(idx + 3) % 6]
    return table


_STRAIGHT = _derive_straight()

INTERIOR_CYCLE = {
    vtype: tuple(lbl for kind, lbl in _ribbon(vtype) if kind == "e")
    for vtype in (FRONT, BACK)
}


def first_edge(half_edge: str) -> int:
    """Interior edge forced directly after entering along a stub."""
    kind, label = _STRAIGHT[(vertex_of(half_edge), ("h", half_edge))]
    assert kind == "e"
    return label


def straight_exit(edge: int, vtype: str) -> str:
    """Stub forced when a geodesic leaves the spine after edge `edge` at `vtype`."""
    kind, label = _STRAIGHT[(vtype, ("e", edge))]
    assert kind == "h"
    return label


def turn_edge(edge: int, vtype: str, turn: str) -> int:
    """Next interior edge after arriving along `edge`, turning left or right.

    Left is the successor of the arrival edge in the interior cyclic order at
    the vertex, right its predecessor; both are admissible geodesic turns.
    """
    cycle = INTERIOR_CYCLE[vtype]
    idx = cycle.index(edge)
    if turn == "L":
        return cycle[(idx + 1) % 3]
    if turn == "R":
        return cycle[(idx - 1) % 3]
    raise ValueError(f"turn must be 'L' or 'R', got {turn!r}")


def _face_next(dart):
    # dart = ("e", label, vtype-of-origin) or ("h", name); stubs bounce back,
    # so following a stub collapses to taking the next slot at its vertex.
    if dart[0] == "e":
        _, label, vtype = dart
        other = flip(vtype)
        ribbon = _ribbon(other)
        idx = ribbon.index(("e", label))
    else:
        _, name = dart
        other = vertex_of(name)
        ribbon = _ribbon(other)
        idx = ribbon.index(("h", name))
    kind, label = ribbon[(idx + 1) % 6]
    if kind == "e":
        return ("e", label, other)
    return ("h", label)


def _trace_cuffs():
    faces = []
    seen = set()
    for start_label in EDGES:
        start = ("e", start_label, FRONT)
        if start in seen:
            continue
        walk, dart = [], start
        while True:
            walk.append(dart)
            seen.add(dart)
            dart = _face_next(dart)
            if dart == start:
                break
        faces.append(walk)
    assert len(faces) == 3, faces
    cuff_of_half = {}
    cuff_word = {}
    cuff_loop = {}
    for walk in faces:
        stubs = [d[1] for d in walk if d[0] == "h"]
        edges = [d for d in walk if d[0] == "e"]
        assert len(stubs) == 2 and len(edges) == 2
        fronts = [s for s in stubs if s[0] == "f"]
        backs = [s for s in stubs if s[0] == "b"]
        assert len(fronts) == 1 and len(backs) == 1
        cuff = int(fronts[0][1])
        assert int(backs[0][1]) == cuff, (
            "ribbon cycles must put f_i and b_i on the same face"
        )
        for s in stubs:
            cuff_of_half[s] = cuff
        cuff_word[cuff] = tuple(sorted(d[1] for d in edges))
        # Face-walk direction fixes the positive traversal of each cuff:
        # the loop based at a vertex starts with the edge departing there.
        for k, d in enumerate(edges):
            nxt = edges[(k + 1) % 2]
            cuff_loop[(cuff, d[2])] = (d[1], nxt[1])
    return cuff_of_half, cuff_word, cuff_loop


CUFF_OF_HALF, CUFF_WORD, CUFF_LOOP = _trace_cuffs()
CUFFS = (1, 2, 3)


def cuff_of(half_edge: str) -> int:
    if half_edge not in HALF_EDGES:
        raise InvalidLabel(f"unknown half-edge {half_edge!r}")
    return CUFF_OF_HALF[half_edge]


def cuff_loop(cuff: int, vtype: str) -> tuple[int, int]:
    """Positively oriented cuff word read as a based loop at a vertex type."""
    return CUFF_LOOP[(cuff, vtype)]


# ---------------------------------------------------------------------------
# cyclic words and curve classes
# ---------------------------------------------------------------------------


def validate_word(word) -> tuple[int, ...]:
    w = tuple(word)
    if not w:
        raise EmptyWord("cyclic word is empty")
    for x in w:
        if x not in EDGES:
            raise InvalidLabel(f"edge label {x!r} not in {EDGES}")
    n = len(w)
    for i in range(n):
        if w[i] == w[(i + 1) % n]:
            raise Backtracking(f"cyclic backtracking at position {i} in {w}")
    return w


def canonical_cyclic(word) -> tuple[int, ...]:
    """Lexicographic minimum over all rotations of the word and its reversal."""
    w = validate_word(word)
    n = len(w)
    doubled = w + w
    best = min(doubled[i:i + n] for i in range(n))
    r = w[::-1]
    doubled = r + r
    best_r = min(doubled[i:i + n] for i in range(n))
    return min(best, best_r)


def is_primitive(word) -> bool:
    w = validate_word(word)
    n = len(w)
    for p in range(1, n):
        if n % p == 0 and w == w[p:] + w[:p]:
            return False
    return True


@dataclass(frozen=True, order=True)
class CurveClass:
    """One free homotopy class of a primitive closed curve, as its canonical word."""

    word: tuple[int, ...]

    def __post_init__(self):
        if len(self.word) % 2:
            raise OddLength(f"closed words have even length, got {self.word}")
        if self.word != canonical_cyclic(self.word):
            raise PantsError(f"word {self.word} is not in canonical form")
        if not is_primitive(self.word):
            raise NonPrimitive(f"word {self.word} is a proper power")

    @property
    def length(self) -> int:
        return len(self.word)

    def to_json_obj(self) -> dict:
        return {"kind": "curve", "word": list(self.word)}


def make_curve(word) -> CurveClass:
    w = validate_word(word)
    if len(w) % 2:
        raise OddLength(f"closed words on the spine have even length, got {w}")
    if not is_primitive(w):
        raise NonPrimitive(f"{w} is a proper power of a shorter word")
    return CurveClass(canonical_cyclic(w))


# ---------------------------------------------------------------------------
# arcs
# ---------------------------------------------------------------------------

_HALF_ORDER = {h: i for i, h in enumerate(HALF_EDGES)}


def _arc_key(start, interior, end):
    return (_HALF_ORDER[start], interior, _HALF_ORDER[end])


def _canonical_arc(start, interior, end):
    if not interior:
        # The two stub routes through F and through B between the same pair of
        # cuffs are homotopic; the front route is the canonical one.
        a, b = sorted((cuff_of(start), cuff_of(end)))
        return (f"f{a}", (), f"f{b}")
    rev = (end, interior[::-1], start)
    fwd = (start, interior, end)
    return min(fwd, rev, key=lambda t: _arc_key(*t))


@dataclass(frozen=True)
class ArcClass:
    """One homotopy class of a geodesic arc with endpoints sliding on cuffs."""

    start: str
    interior: tuple[int, ...]
    end: str

    def __post_init__(self):
        s, w, e = _validate_arc(self.start, self.interior, self.end)
        if (s, w, e) != _canonical_arc(s, w, e):
            raise PantsError(f"arc ({s},{w},{e}) is not in canonical form")

    @property
    def length(self) -> int:
        return len(self.interior) + 1

    @property
    def cuffs(self) -> tuple[int, int]:
        return (cuff_of(self.start), cuff_of(self.end))

    def _sort_key(self):
        return (self.length, _arc_key(self.start, self.interior, self.end))

    def to_json_obj(self) -> dict:
        return {
            "kind": "arc",
            "start": self.start,
            "interior": list(self.interior),
            "end": self.end,
        }


def _validate_arc(start, interior, end):
    w = tuple(interior)
    if start not in HALF_EDGES or end not in HALF_EDGES:
        raise InvalidLabel(f"bad half-edge in arc ({start!r}, {end!r})")
    for x in w:
        if x not in EDGES:
            raise InvalidLabel(f"edge label {x!r} not in {EDGES}")
    for i in range(len(w) - 1):
        if w[i] == w[i + 1]:
            raise Backtracking(f"backtracking inside arc interior {w}")
    v = vertex_of(start)
    end_vertex = v if len(w) % 2 == 0 else flip(v)
    if vertex_of(end) != end_vertex:
        raise PantsError(
            f"end {end} sits at {vertex_of(end)}, parity forces {end_vertex}"
        )
    if not w:
        if cuff_of(start) == cuff_of(end):
            raise Backtracking(
                f"stub pair ({start},{end}) doubles back to the same cuff"
            )
        return start, w, end
    if w[0] != first_edge(start):
        raise NotGeodesic(
            f"arc must continue straight: {start} forces edge {first_edge(start)}"
        )
    last_vertex = flip(end_vertex)
    if end != straight_exit(w[-1], flip(last_vertex)):
        raise NotGeodesic(
            f"arc must leave straight after edge {w[-1]}"
        )
    return start, w, end


def make_arc(start, interior, end) -> ArcClass:
    s, w, e = _validate_arc(start, tuple(interior), end)
    cs, cw, ce = _canonical_arc(s, w, e)
    return ArcClass(cs, cw, ce)


def turns_to_edges(start: str, turns) -> ArcClass:
    """Resolve a start stub and a left/right turn sequence into an arc.

    The first interior edge and the final stub are forced; a sequence of
    k turns yields an arc of length k + 2.
    """
    turns = tuple(turns)
    edge = first_edge(start)
    vtype = flip(vertex_of(start))
    interior = [edge]
    for t in turns:
        edge = turn_edge(edge, vtype, t)
        vtype = flip(vtype)
        interior.append(edge)
    end = straight_exit(edge, vtype)
    return make_arc(start, interior, end)


def edges_to_turns(start: str, interior) -> tuple[str, ...]:
    """Inverse of `turns_to_edges` for the oriented representative."""
    interior = tuple(interior)
    if not interior:
        return ()
    if interior[0] != first_edge(start):
        raise NotGeodesic(f"{start} forces edge {first_edge(start)} first")
    turns = []
    vtype = flip(vertex_of(start))
    for prev, nxt in zip(interior, interior[1:]):
        cycle = INTERIOR_CYCLE[vtype]
        idx = cycle.index(prev)
        if nxt == cycle[(idx + 1) % 3]:
            turns.append("L")
        elif nxt == cycle[(idx - 1) % 3]:
            turns.append("R")
        else:
            raise Backtracking(f"{prev} -> {nxt} is not a turn")
        vtype = flip(vtype)
    return tuple(turns)


# ---------------------------------------------------------------------------
# censuses
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _curve_stratum(n: int) -> tuple[CurveClass, ...]:
    assert n >= 2 and n % 2 == 0
    seen = set()
    # Depth-first over linear words without adjacent repeats; dihedral
    # canonical forms dedup rotations and reversals exactly.
    stack = [(x,) for x in EDGES]
    while stack:
        w = stack.pop()
        if len(w) == n:
            if w[-1] != w[0] and is_primitive(w):
                seen.add(canonical_cyclic(w))
            continue
        for x in EDGES:
            if x != w[-1]:
                stack.append(w + (x,))
    return tuple(CurveClass(w) for w in sorted(seen, key=lambda w: (len(w), w)))


def enumerate_curves(L_max: int, cap: int | None = None) -> tuple[CurveClass, ...]:
    """All canonical primitive closed-curve classes of length <= L_max."""
    if L_max < 2:
        raise ValueError(f"L_max must be >= 2, got {L_max}")
    cap = census_cap() if cap is None else cap
    out = []
    for n in range(2, L_max + 1, 2):
        stratum = _curve_stratum(n)
        if len(out) + len(stratum) > cap:
            raise CensusCapExceeded(
                f"curve census at L={n} exceeds cap {cap}; raise {CAP_ENV_VAR}"
            )
        out.extend(stratum)
    return tuple(out)


@lru_cache(maxsize=None)
def _arc_stratum(L: int) -> tuple[ArcClass, ...]:
    assert L >= 1
    if L == 1:
        arcs = {
            make_arc(f"f{a}", (), f"f{b}")
            for a in (1, 2, 3)
            for b in (1, 2, 3)
            if a < b
        }
    else:
        arcs = set()
        for start in HALF_EDGES:
            for bits in range(2 ** (L - 2)):
                turns = tuple(
                    "L" if (bits >> k) & 1 else "R" for k in range(L - 2)
                )
                arcs.add(turns_to_edges(start, turns))
    expected = 3 if L == 1 else 3 * 2 ** (L - 2)
    if len(arcs) != expected:
        raise AssertionError(
            f"arc stratum {L}: got {len(arcs)}, expected {expected}"
        )
    return tuple(sorted(arcs, key=ArcClass._sort_key))


def enumerate_arcs(L_max: int, cap: int | None = None) -> tuple[ArcClass, ...]:
    """All canonical arc classes of length <= L_max (3 * 2**(L-1) of them)."""
    if L_max < 1:
        raise ValueError(f"L_max must be >= 1, got {L_max}")
    cap = census_cap() if cap is None else cap
    out = []
    for L in range(1, L_max + 1):
        stratum = _arc_stratum(L)
        if len(out) + len(stratum) > cap:
            raise CensusCapExceeded(
                f"arc census at L={L} exceeds cap {cap}; raise {CAP_ENV_VAR}"
            )
        out.extend(stratum)
    return tuple(out)
