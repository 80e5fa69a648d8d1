"""Arrow diagrams in the disk, encoded as Morse words.

A diagram is a bottom-to-top sequence of events over a running strand
count.  Events (1-based positions):

  cup i / cup< i / cup> i -- insert two strands at positions i, i+1
  cap i                   -- join the strands at positions i, i+1
  x+ i                    -- crossing of strands i, i+1; strand i passes over
  x- i                    -- crossing of strands i, i+1; strand i+1 passes over
  ar+ i / ar- i           -- arrow on strand i pointing up / down the page

Arrows mark where a strand traverses the fiber direction of the ambient
circle bundle; an oval's net arrow count and the nesting of ovals carry
the skein-theoretic content, so the planar embedding is part of the data.

Oriented words use cup< / cup> exclusively: cup< orients the new left
strand upward, cup> the new right strand upward.

The sign convention for arrows on a closed curve: an arrow counts +1 when
the curve's bounded side lies to the right of the arrow direction (so an
up-arrow on the left wall of a simple oval is +1).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

Event = Tuple[str, int]

CUP_KINDS = ("cup", "cup<", "cup>")
CROSS_KINDS = ("x+", "x-")
ARROW_KINDS = ("ar+", "ar-")
ALL_KINDS = CUP_KINDS + ("cap",) + CROSS_KINDS + ARROW_KINDS

DEFAULT_CROSSING_CAP = 24


class DiagramError(Exception):
    pass


class ParseError(DiagramError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, col {column}: {message}")
        self.line = line
        self.column = column


class MoveError(DiagramError):
    """A move's local pattern did not match at the requested location."""


class ResourceCapError(DiagramError):
    """Crossing count exceeds the configured state-sum cap."""


def _arity(kind: str) -> int:
    # width of the event's strand-count footprint
    if kind in CUP_KINDS:
        return 0  # needs pos <= count+1
    if kind == "cap" or kind in CROSS_KINDS:
        return 2
    return 1  # arrows


@dataclass(frozen=True)
class MorseWord:
    """A (possibly open) Morse word; n_bottom strands enter at the bottom."""

    events: Tuple[Event, ...]
    n_bottom: int = 0

    # -- basic structure ------------------------------------------------

    def counts(self) -> List[int]:
        """Strand count before each event slice, plus the final count."""
        c = self.n_bottom
        out = [c]
        for kind, _ in self.events:
            if kind in CUP_KINDS:
                c += 2
            elif kind == "cap":
                c -= 2
            out.append(c)
        return out

    @property
    def n_top(self) -> int:
        return self.counts()[-1]

    def is_closed(self) -> bool:
        return self.n_bottom == 0 and self.n_top == 0

    def crossing_count(self) -> int:
        return sum(1 for k, _ in self.events if k in CROSS_KINDS)

    def arrow_count(self) -> int:
        return sum(1 for k, _ in self.events if k in ARROW_KINDS)

    def is_oriented(self) -> bool:
        return all(k != "cup" for k, _ in self.events if k in CUP_KINDS)

    # -- validation -------------------------------------------------------

    def validate(self) -> List[str]:
        """Return a list of violations; empty means the word is valid."""
        errors: List[str] = []
        c = self.n_bottom
        for idx, (kind, pos) in enumerate(self.events):
            if kind not in ALL_KINDS:
                errors.append(f"event {idx}: unknown kind {kind!r}")
                continue
            if kind in CUP_KINDS:
                if not (1 <= pos <= c + 1):
                    errors.append(
                        f"event {idx}: cup at {pos} out of range (count {c})")
                c += 2
            elif kind == "cap":
                if not (1 <= pos <= c - 1):
                    errors.append(
                        f"event {idx}: cap at {pos} out of range (count {c})")
                c -= 2
                if c < 0:
                    errors.append(f"event {idx}: strand count went negative")
                    c = 0
            elif kind in CROSS_KINDS:
                if not (1 <= pos <= c - 1):
                    errors.append(
                        f"event {idx}: crossing at {pos} out of range (count {c})")
            else:
                if not (1 <= pos <= c):
                    errors.append(
                        f"event {idx}: arrow at {pos} out of range (count {c})")
        if c != self.n_top:
            pass  # unreachable: counts derive from events
        if self.n_bottom == 0 and c != 0:
            errors.append(f"final strand count {c}, expected 0")
        if errors:
            return errors
        # orientation consistency where cup senses are present
        senses = {k for k, _ in self.events if k in ("cup<", "cup>")}
        plain = any(k == "cup" for k, _ in self.events)
        if senses and plain:
            errors.append("oriented words must use cup</cup> exclusively")
            return errors
        if senses:
            errors.extend(self._orientation_errors())
        return errors

    def _orientation_errors(self) -> List[str]:
        errors: List[str] = []
        flows: List[int] = [0] * self.n_bottom  # +1 up, -1 down; 0 unknown
        for idx, (kind, pos) in enumerate(self.events):
            if kind == "cup<":
                flows[pos - 1:pos - 1] = [+1, -1]
            elif kind == "cup>":
                flows[pos - 1:pos - 1] = [-1, +1]
            elif kind == "cup":
                flows[pos - 1:pos - 1] = [0, 0]
            elif kind == "cap":
                a, b = flows[pos - 1], flows[pos]
                if a and b and a == b:
                    errors.append(
                        f"event {idx}: cap joins two strands flowing the same way")
                del flows[pos - 1:pos + 1]
            elif kind in CROSS_KINDS:
                flows[pos - 1], flows[pos] = flows[pos], flows[pos - 1]
        return errors

    def require_valid(self) -> "MorseWord":
        errs = self.validate()
        if errs:
            raise DiagramError("; ".join(errs))
        return self

    # -- serialization ------------------------------------------------------

    def render(self) -> str:
        return "\n".join(f"{k} {p}" for k, p in self.events) + ("\n" if self.events else "")

    def __repr__(self):
        inner = " / ".join(f"{k} {p}" for k, p in self.events)
        return f"MorseWord({inner})"


def parse_morse(text: str, n_bottom: int = 0) -> MorseWord:
    """Parse diagram text (one event per line, ``#`` comments)."""
    events: List[Event] = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected '<kind> <index>', got {line!r}", ln)
        kind, index = parts
        if kind not in ALL_KINDS:
            raise ParseError(f"unknown event {kind!r}", ln)
        try:
            pos = int(index)
        except ValueError:
            raise ParseError(f"bad index {index!r}", ln, len(kind) + 2)
        if pos < 1:
            raise ParseError("indices are 1-based", ln, len(kind) + 2)
        events.append((kind, pos))
    word = MorseWord(tuple(events), n_bottom)
    errs = word.validate()
    if errs:
        raise ParseError(errs[0], len(text.splitlines()) or 1)
    return word


def word(*evs: str, n_bottom: int = 0) -> MorseWord:
    """Convenience constructor from strings like 'cup 1'."""
    out = []
    for ev in evs:
        k, p = ev.split()
        out.append((k, int(p)))
    return MorseWord(tuple(out), n_bottom)


# ---------------------------------------------------------------------------
# Curve tracing
# ---------------------------------------------------------------------------


class _UnionFind:
    def __init__(self):
        self.parent: Dict[int, int] = {}

    def make(self, x: int):
        self.parent[x] = x

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


@dataclass
class Traced:
    """Result of sweeping a word: curve structure and arrow data.

    ``curve_of`` maps segment ids to curve representatives.  Snapshots
    record, per relevant event, the list of segment ids alive just before
    (arrows) or just before insertion (cups).
    """

    curves: List[int]
    arrow_data: List[Tuple[int, int, int, List[int]]]  # (curve, dir, position, snapshot)
    birth: Dict[int, Tuple[int, int, List[int]]]  # curve -> (event idx, pos, snapshot)
    flows: Dict[int, int]  # segment -> +1 up / -1 down (oriented words only)
    open_chains: List[List[int]]


def trace_curves(w: MorseWord) -> Traced:
    """Trace the closed curves of a word (crossings are traversed)."""
    uf = _UnionFind()
    next_id = itertools.count()
    strands: List[int] = []
    flows: Dict[int, int] = {}
    bottom_ids: List[int] = []
    for _ in range(w.n_bottom):
        s = next(next_id)
        uf.make(s)
        strands.append(s)
        bottom_ids.append(s)
    arrow_data: List[Tuple[int, int, int, List[int]]] = []
    births: List[Tuple[int, int, int, List[int]]] = []  # (segment, idx, pos, snapshot)

    for idx, (kind, pos) in enumerate(w.events):
        i = pos - 1
        if kind in CUP_KINDS:
            snapshot = list(strands)
            a, b = next(next_id), next(next_id)
            uf.make(a)
            uf.make(b)
            uf.union(a, b)
            strands[i:i] = [a, b]
            if kind == "cup<":
                flows[a], flows[b] = +1, -1
            elif kind == "cup>":
                flows[a], flows[b] = -1, +1
            births.append((a, idx, pos, snapshot))
        elif kind == "cap":
            a, b = strands[i], strands[i + 1]
            uf.union(a, b)
            del strands[i:i + 2]
        elif kind in CROSS_KINDS:
            strands[i], strands[i + 1] = strands[i + 1], strands[i]
        else:
            direction = +1 if kind == "ar+" else -1
            arrow_data.append((strands[i], direction, pos, list(strands)))

    open_segments = set(bottom_ids) | set(strands)
    curves = []
    seen = set()
    for seg in uf.parent:
        r = uf.find(seg)
        if r not in seen:
            seen.add(r)
            curves.append(r)
    birth: Dict[int, Tuple[int, int, List[int]]] = {}
    for seg, idx, pos, snapshot in births:
        r = uf.find(seg)
        if r not in birth:
            birth[r] = (idx, pos, snapshot)
    resolved_arrows = [
        (uf.find(seg), d, pos, [uf.find(s) for s in snap])
        for seg, d, pos, snap in arrow_data
    ]
    resolved_birth = {
        c: (idx, pos, [uf.find(s) for s in snap]) for c, (idx, pos, snap) in birth.items()
    }
    open_chains = [[uf.find(s)] for s in open_segments]
    return Traced(
        curves=list(curves),
        arrow_data=resolved_arrows,
        birth=resolved_birth,
        flows=dict(flows),
        open_chains=open_chains,
    )


# ---------------------------------------------------------------------------
# Forest extraction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Node:
    """A node of an arrow forest: one oval with its nested children."""

    net: int
    children: Tuple["Node", ...] = ()
    orient: Optional[str] = None  # "ccw" / "cw" for oriented forests

    def canonical(self) -> "Node":
        kids = tuple(sorted((c.canonical() for c in self.children), key=_node_key))
        return Node(self.net, kids, self.orient)


def _node_key(n: Node):
    return (n.net, n.orient or "", tuple(_node_key(c) for c in n.children))


Forest = Tuple[Node, ...]


def canonical_forest(roots: Iterable[Node]) -> Forest:
    return tuple(sorted((r.canonical() for r in roots), key=_node_key))


def to_forest(w: MorseWord, oriented: bool = False) -> Forest:
    """Extract the nesting forest of a crossing-free closed word.

    Each closed curve becomes a node carrying its net arrow count (the
    sign convention is described in the module docstring); containment is
    computed by parity counting along the sweep, so the result is exactly
    the planar nesting structure.
    """
    if w.crossing_count():
        raise DiagramError("to_forest requires a crossing-free word")
    if not w.is_closed():
        raise DiagramError("to_forest requires a closed word")
    w.require_valid()
    tr = trace_curves(w)

    # Net arrows: +1 when (up-arrow XOR odd count of same-curve strands
    # strictly left) fails -- i.e. up-arrow with an even count to its left.
    nets: Dict[int, int] = {c: 0 for c in tr.curves}
    for seg, direction, pos, snapshot in tr.arrow_data:
        left_same = sum(1 for s in snapshot[: pos - 1] if s == seg)
        interior_right = (left_same % 2 == 0)
        sign = 1 if (direction == +1) == interior_right else -1
        nets[seg] += sign

    # Orientation labels (oriented words): at the birth cup's left strand,
    # label is "ccw" iff the flow is up exactly when the bounded side is to
    # the right.
    orients: Dict[int, Optional[str]] = {c: None for c in tr.curves}
    if oriented:
        # Determine the flow of the first-born segment for each curve.  The
        # birth snapshot excludes the new pair, so the left strand of the
        # pair has `pos-1` strands strictly left of it.
        # We need the flow of that left strand; recover it by re-sweeping.
        flows_at_birth = _birth_flows(w)
        for c, (idx, pos, snapshot) in tr.birth.items():
            left_same = sum(1 for s in snapshot[: pos - 1] if s == c)
            interior_right = (left_same % 2 == 0)
            up = flows_at_birth[idx] == +1
            orients[c] = "ccw" if (up == interior_right) else "cw"

    # Containment partial order via ray parity at each curve's birth point.
    curves = list(tr.birth.keys())
    inside: Dict[int, List[int]] = {c: [] for c in curves}
    for b in curves:
        idx, pos, snapshot = tr.birth[b]
        for a in curves:
            if a == b:
                continue
            cnt = sum(1 for s in snapshot[: pos - 1] if s == a)
            if cnt % 2 == 1:
                inside[b].append(a)
    # parent = containing curve that is itself contained in all other containers
    parent: Dict[int, Optional[int]] = {}
    for b in curves:
        containers = inside[b]
        best = None
        for a in containers:
            if all(x == a or x in inside[a] for x in containers):
                best = a
                break
        parent[b] = best

    order = {c: tr.birth[c][0] for c in curves}

    def build(c: int) -> Node:
        kids = sorted((k for k in curves if parent[k] == c), key=order.get)
        return Node(nets[c], tuple(build(k) for k in kids),
                    orients[c] if oriented else None)

    roots = sorted((c for c in curves if parent[c] is None), key=order.get)
    return tuple(build(c) for c in roots)


def _birth_flows(w: MorseWord) -> Dict[int, int]:
    """Flow (+1 up / -1 down) of the left strand created by each cup event."""
    out: Dict[int, int] = {}
    for idx, (kind, _) in enumerate(w.events):
        if kind == "cup<":
            out[idx] = +1
        elif kind == "cup>":
            out[idx] = -1
        elif kind == "cup":
            out[idx] = 0
    return out


# ---------------------------------------------------------------------------
# Kauffman states
# ---------------------------------------------------------------------------


def kauffman_states(
    w: MorseWord, cap: int = DEFAULT_CROSSING_CAP
) -> List[Tuple[int, MorseWord]]:
    """All 2^c smoothings of a closed unoriented word.

    Returns (exponent, crossing-free word) pairs, where the exponent is
    (#A-smoothings) - (#B-smoothings).  The A-smoothing of ``x+`` is the
    vertical pass-through, its B-smoothing the turnback pair; for ``x-``
    the roles are exchanged.
    """
    w.require_valid()
    positions = [i for i, (k, _) in enumerate(w.events) if k in CROSS_KINDS]
    c = len(positions)
    if c > cap:
        raise ResourceCapError(
            f"{c} crossings exceed the state-sum cap {cap}")
    out: List[Tuple[int, MorseWord]] = []
    for choice in itertools.product((0, 1), repeat=c):
        events: List[Event] = []
        exponent = 0
        it = iter(choice)
        for idx, (kind, pos) in enumerate(w.events):
            if kind not in CROSS_KINDS:
                events.append((kind, pos))
                continue
            pick_a = next(it) == 0
            exponent += 1 if pick_a else -1
            smooth_id = (kind == "x+") == pick_a
            if smooth_id:
                pass  # vertical smoothing: no event
            else:
                events.append(("cap", pos))
                events.append(("cup", pos))
        out.append((exponent, MorseWord(tuple(events), w.n_bottom)))
    return out


# ---------------------------------------------------------------------------
# Moves
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MoveSpec:
    """A located Reidemeister-type move.

    move: one of "omega1", "omega2", "omega3", "omega4", "omega5",
          "planar", "slide".
    index: event index of the move site (for insertions: insert before it).
    variant: move-specific tag, see apply_move.
    pos: strand position where applicable.
    p / direction: slide parameters.
    """

    move: str
    index: int
    variant: str = ""
    pos: int = 0
    p: int = 0
    direction: int = +1


def _events_at(w: MorseWord, idx: int, n: int) -> Tuple[Event, ...]:
    if idx < 0 or idx + n > len(w.events):
        raise MoveError(f"no {n} events at index {idx}")
    return w.events[idx:idx + n]


def _splice(w: MorseWord, idx: int, removed: int, inserted: Sequence[Event]) -> MorseWord:
    events = w.events[:idx] + tuple(inserted) + w.events[idx + removed:]
    out = MorseWord(events, w.n_bottom)
    errs = out.validate()
    if errs:
        raise MoveError("move produced an invalid word: " + errs[0])
    return out


# The arrow-push move: an arrow sliding through an adjacent crossing flips
# the crossing (the strand's relative height changes across the arrow).
# Each pair below is interchangeable in both directions.
_PUSH_RULES = [
    # ((below...), (above...)) as ((kind,dpos),...) with dpos relative to i
    ((("ar+", 0), ("x+", 0)), (("x-", 0), ("ar+", 1))),
    ((("ar+", 1), ("x-", 0)), (("x+", 0), ("ar+", 0))),
    ((("ar-", 0), ("x-", 0)), (("x+", 0), ("ar-", 1))),
    ((("ar-", 1), ("x+", 0)), (("x-", 0), ("ar-", 0))),
]


def apply_move(w: MorseWord, m: MoveSpec) -> MorseWord:
    """Apply a located move; raises MoveError when the pattern mismatches.

    Variants:
      omega1: "add+R"/"add-R"/"add+L"/"add-L" insert a curl on strand pos
              (sign = crossing type, side = where the curl lobe sits);
              "remove" deletes the 3-event curl found at index.
      omega2: "add+-"/"add-+" insert a canceling crossing pair at pos;
              "remove" deletes it at index.
      omega3: "swap" rewrites a same-sign braid triple at index.
      omega4: "add+-"/"add-+" insert a canceling arrow pair on strand pos;
              "remove" deletes it.
      omega5: "push" rewrites the 2-event arrow/crossing pattern at index.
      planar: "exchange" swaps disjoint-support neighbours at index;
              "cancelLR"/"cancelRL" delete a cup/cap zigzag at index;
              "insertLR"/"insertRL" insert one acting on strand pos.
      slide:  reroute the outer-face arc at (index, pos) around the whole
              diagram, adding p arrows (direction +1: up-arrows with a
              left-side cut; -1: the mirror construction).
    """
    w.require_valid()
    mv, idx, var = m.move, m.index, m.variant

    if mv == "omega1":
        if var == "remove":
            e = _events_at(w, idx, 3)
            q = e[0][1]
            ok = (
                e[0][0] in CUP_KINDS and e[1][0] in CROSS_KINDS and e[2][0] == "cap"
                and ((e[1][1] == q - 1 and e[2][1] == q)      # curl on the left
                     or (e[1][1] == q and e[2][1] == q)))     # curl on the right
            if not ok:
                raise MoveError("expected a 3-event curl (cup, crossing, cap)")
            return _splice(w, idx, 3, [])
        sign = "x+" if "+" in var else "x-"
        q = m.pos
        if var.endswith("R"):
            ins = [("cup", q + 1), (sign, q), ("cap", q + 1)]
        else:
            ins = [("cup", q), (sign, q), ("cap", q + 1)]
        return _splice(w, idx, 0, ins)

    if mv == "omega2":
        if var == "remove":
            e = _events_at(w, idx, 2)
            kinds = (e[0][0], e[1][0])
            if e[0][1] != e[1][1] or set(kinds) != {"x+", "x-"}:
                raise MoveError("expected adjacent canceling crossings")
            return _splice(w, idx, 2, [])
        order = [("x+", m.pos), ("x-", m.pos)] if var == "add+-" else [("x-", m.pos), ("x+", m.pos)]
        return _splice(w, idx, 0, order)

    if mv == "omega3":
        e = _events_at(w, idx, 3)
        kinds = {e[0][0], e[1][0], e[2][0]}
        if len(kinds) != 1 or e[0][0] not in CROSS_KINDS:
            raise MoveError("expected three same-sign crossings")
        k = e[0][0]
        i = min(e[0][1], e[1][1])
        if (e[0][1], e[1][1], e[2][1]) == (i, i + 1, i):
            repl = [(k, i + 1), (k, i), (k, i + 1)]
        elif (e[0][1], e[1][1], e[2][1]) == (i + 1, i, i + 1):
            repl = [(k, i), (k, i + 1), (k, i)]
        else:
            raise MoveError("expected a braid triple (i, i+1, i)")
        return _splice(w, idx, 3, repl)

    if mv == "omega4":
        if var == "remove":
            e = _events_at(w, idx, 2)
            if e[0][1] != e[1][1] or {e[0][0], e[1][0]} != {"ar+", "ar-"}:
                raise MoveError("expected adjacent opposite arrows")
            return _splice(w, idx, 2, [])
        order = [("ar+", m.pos), ("ar-", m.pos)] if var == "add+-" else [("ar-", m.pos), ("ar+", m.pos)]
        return _splice(w, idx, 0, order)

    if mv == "omega5":
        e = _events_at(w, idx, 2)
        base_candidates = {e[0][1], e[1][1], e[0][1] - 1, e[1][1] - 1}
        for below, above in _PUSH_RULES:
            for i in base_candidates:
                if i < 1:
                    continue
                pat_b = tuple((k, i + d) for k, d in below)
                pat_a = tuple((k, i + d) for k, d in above)
                if e == pat_b:
                    return _splice(w, idx, 2, list(pat_a))
                if e == pat_a:
                    return _splice(w, idx, 2, list(pat_b))
        raise MoveError("expected an arrow adjacent to a crossing it can pass")

    if mv == "planar":
        if var == "exchange":
            return _exchange(w, idx)
        if var in ("cancelLR", "cancelRL"):
            e = _events_at(w, idx, 2)
            q = e[0][1]
            if var == "cancelLR":
                ok = e == (("cup", q), ("cap", q + 1)) or (
                    e[0][0] in CUP_KINDS and e[0][1] == q and e[1] == ("cap", q + 1))
            else:
                ok = (e[0][0] in CUP_KINDS and e[1][0] == "cap"
                      and e[1][1] == q - 1)
            if not ok:
                raise MoveError("expected a cup/cap zigzag")
            return _splice(w, idx, 2, [])
        if var in ("insertLR", "insertRL"):
            q = m.pos
            ins = [("cup", q), ("cap", q + 1)] if var == "insertLR" else [("cup", q + 1), ("cap", q)]
            return _splice(w, idx, 0, ins)
        raise MoveError(f"unknown planar variant {var!r}")

    if mv == "slide":
        return slide(w, m.index, m.pos, m.p, m.direction)

    raise MoveError(f"unknown move {mv!r}")


def _support(kind: str, pos: int) -> Tuple[int, int]:
    if kind in CUP_KINDS:
        return (pos, pos + 1)
    if kind == "cap" or kind in CROSS_KINDS:
        return (pos, pos + 1)
    return (pos, pos)


def _delta(kind: str) -> int:
    if kind in CUP_KINDS:
        return 2
    if kind == "cap":
        return -2
    return 0


def _exchange(w: MorseWord, idx: int) -> MorseWord:
    (k1, p1), (k2, p2) = _events_at(w, idx, 2)
    lo1, hi1 = _support(k1, p1)
    lo2, hi2 = _support(k2, p2)
    d1, d2 = _delta(k1), _delta(k2)
    # Either event 2 lies entirely right of event 1 (shift it left past the
    # cup/cap width), or entirely left of it (shift event 1 instead).
    if lo2 > hi1 and lo2 - d1 > hi1:
        repl = [(k2, p2 - d1), (k1, p1)]
    elif hi2 < lo1 and hi2 < lo1 + d2:
        repl = [(k2, p2), (k1, p1 + d2)]
    else:
        raise MoveError("events do not have disjoint support")
    return _splice(w, idx, 2, repl)


def slide(w: MorseWord, idx: int, pos: int, p: int, direction: int = +1) -> MorseWord:
    """Reroute the outer-face arc at (event slice idx, strand pos) around
    the whole diagram, adding p fiber arrows.

    The strand at the cut must border the outer face (leftmost position 1
    for direction +1, rightmost for direction -1).  The rerouted arc
    encloses everything else in the diagram; the enclosed side of the
    original strand flips, and p arrows of one direction appear on the
    new enclosing loop.
    """
    if not w.is_closed():
        raise MoveError("slide acts on closed words")
    counts = w.counts()
    if idx < 0 or idx > len(w.events):
        raise MoveError("slide index out of range")
    c = counts[idx]
    if c < 1:
        raise MoveError("no strand to slide at this slice")
    if direction == +1:
        if pos != 1:
            raise MoveError("direction +1 cuts the leftmost strand (pos 1)")
    elif direction == -1:
        if pos != c:
            raise MoveError(f"direction -1 cuts the rightmost strand (pos {c})")
    else:
        raise MoveError("slide direction must be +1 or -1")

    def shift(events: Iterable[Event]) -> List[Event]:
        return [(k, q + 1) for k, q in events]

    below = shift(w.events[:idx])
    above = shift(w.events[idx:])
    arrow = "ar+" if direction == +1 else "ar-"
    loop_arrows: List[Event] = [(arrow, 1)] * p
    if direction == +1:
        splice = [("cap", 1), ("cup", 1)]
    else:
        splice = [("cap", c + 1), ("cup", c + 1)]
    events = (
        [("cup", 1)] + loop_arrows + below + splice + above + [("cap", 1)]
    )
    out = MorseWord(tuple(events), 0)
    errs = out.validate()
    if errs:
        raise MoveError("slide produced an invalid word: " + errs[0])
    return out


def find_move_sites(w: MorseWord, move: str) -> List[MoveSpec]:
    """All locations where `move` matches as a rewriting (non-insert) site."""
    sites: List[MoveSpec] = []
    n = len(w.events)
    for idx in range(n - 1):
        e = w.events[idx:idx + 2]
        if move == "omega2" and e[0][1] == e[1][1] and {e[0][0], e[1][0]} == {"x+", "x-"}:
            sites.append(MoveSpec("omega2", idx, "remove"))
        if move == "omega4" and e[0][1] == e[1][1] and {e[0][0], e[1][0]} == {"ar+", "ar-"}:
            sites.append(MoveSpec("omega4", idx, "remove"))
        if move == "omega5":
            for below, above in _PUSH_RULES:
                for i in {e[0][1], e[1][1], e[0][1] - 1, e[1][1] - 1}:
                    if i < 1:
                        continue
                    if e == tuple((k, i + d) for k, d in below) or \
                       e == tuple((k, i + d) for k, d in above):
                        sites.append(MoveSpec("omega5", idx, "push"))
                        break
        if move == "planar":
            try:
                _exchange(w, idx)
                sites.append(MoveSpec("planar", idx, "exchange"))
            except MoveError:
                pass
    if move == "omega3":
        for idx in range(n - 2):
            try:
                apply_move(w, MoveSpec("omega3", idx, "swap"))
                sites.append(MoveSpec("omega3", idx, "swap"))
            except MoveError:
                pass
    if move == "omega1":
        for idx in range(n - 2):
            try:
                apply_move(w, MoveSpec("omega1", idx, "remove"))
                sites.append(MoveSpec("omega1", idx, "remove"))
            except MoveError:
                pass
    return sites
