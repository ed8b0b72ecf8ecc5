"""Dyadic symbolic dynamics driven by a QMF filter set.

For a QMF set M, each point of [0,1) admits exactly one infinite itinerary
under the inverse branches tau_0(x) = x/2 and tau_1(x) = (x+1)/2 that stays in
M (the chosen path).  Everything here is computed symbolically over interval
pieces, never pointwise: subordinated partitions, their labelled functional
graphs, cycle enumeration, and the piecewise map x -> chosen path.
"""

from __future__ import annotations

import bisect
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .intervals import IntervalSet
from .words import EPWord, rotations

DEFAULT_MAX_SPLITS = 1 << 12

HALF = Fraction(1, 2)
UNIT = IntervalSet.interval(0, 1)


class NotSubordinated(ValueError):
    """A partition piece whose tau-image does not land in a single piece."""

    def __init__(self, message: str, counterexample: Optional[IntervalSet] = None):
        super().__init__(message)
        self.counterexample = counterexample


class Unpartitionable(RuntimeError):
    """Raised when the split budget is exhausted before subordination."""

    def __init__(self, splits: int):
        super().__init__(f"no subordinated partition found within {splits} splits")
        self.splits = splits


def tau(digit: int, A: IntervalSet) -> IntervalSet:
    """Exact image of A under tau_digit."""
    return A.affine(HALF, Fraction(digit, 2))


@dataclass(frozen=True)
class Cycle:
    """A cyclic binary word together with its rational cycle points.

    theta_0 = (sum 2^i l_i) / (2^p - 1) and theta_{j+1} = tau_{l_j}(theta_j);
    the word for the constant-1 cycle has the fixed point 1.
    """

    word: str
    points: Tuple[Fraction, ...]

    @staticmethod
    def from_word(word: str) -> "Cycle":
        if not word or any(c not in "01" for c in word):
            raise ValueError(f"cycle word must be nonempty binary, got {word!r}")
        p = len(word)
        theta = Fraction(sum(int(c) << i for i, c in enumerate(word)), (1 << p) - 1)
        points = [theta]
        for c in word[:-1]:
            theta = (theta + int(c)) / 2
            points.append(theta)
        return Cycle(word=word, points=tuple(points))

    def canonical(self) -> "Cycle":
        """The rotation whose starting point theta_0 is smallest."""
        j = min(range(len(self.points)), key=lambda i: self.points[i])
        return self.rotate(j)

    def rotate(self, j: int) -> "Cycle":
        p = len(self.word)
        j %= p
        return Cycle(self.word[j:] + self.word[:j], self.points[j:] + self.points[:j])

    def __len__(self) -> int:
        return len(self.word)

    def to_json(self) -> dict:
        from .intervals import rat_str

        return {"word": self.word, "points": [rat_str(t) for t in self.points]}


@dataclass
class PartitionGraph:
    """Functional labelled graph of a subordinated partition."""

    vertices: List[IntervalSet]
    target: List[int]
    label: List[int]

    def to_json(self) -> dict:
        return {
            "vertices": [v.to_json() for v in self.vertices],
            "edges": [
                {"from": i, "to": self.target[i], "label": self.label[i]}
                for i in range(len(self.vertices))
            ],
        }


@dataclass
class PiecewisePath:
    """Partition of [0,1) into interval pieces, each carrying its chosen path."""

    pieces: List[Tuple[IntervalSet, EPWord]]

    def path_at(self, x) -> EPWord:
        for piece, word in self.pieces:
            if piece.contains_point(x):
                return word
        raise KeyError(f"{x} not covered")

    def to_json(self) -> list:
        return [
            {"piece": piece.to_json(), "path": word.to_text()}
            for piece, word in self.pieces
        ]


# -- QMF plumbing ---------------------------------------------------------------


def is_qmf(M: IntervalSet) -> bool:
    """M and s(M) partition [0,1) up to measure zero."""
    if M.is_empty or M.inf < 0 or M.sup > 1:
        return False
    sM = M.s_map()
    return M.union(sM) == UNIT and M.is_disjoint_from(sM)


def chosen_digit_pieces(M: IntervalSet) -> Tuple[IntervalSet, IntervalSet]:
    """(zero_piece, one_piece): where the chosen first digit is 0 resp. 1.

    zero_piece = {x : tau_0 x in M} = 2 * (M intersect [0,1/2)); the QMF
    condition makes the two pieces complementary in [0,1).
    """
    if not is_qmf(M):
        raise ValueError("chosen digits need a QMF filter set")
    zero = M.intersect(IntervalSet.interval(0, HALF)).affine(2)
    return zero, UNIT.subtract(zero)


# -- subordinated partitions ------------------------------------------------------


def verify_partition(M: IntervalSet, partition: Sequence[IntervalSet]) -> PartitionGraph:
    """Check subordination of a given partition of M and build its graph."""
    union = IntervalSet.empty()
    total = Fraction(0)
    for piece in partition:
        union = union.union(piece)
        total += piece.measure()
    if union != M or total != M.measure():
        raise ValueError("partition must cover M disjointly")

    target: List[int] = []
    label: List[int] = []
    for i, piece in enumerate(partition):
        img0, img1 = tau(0, piece), tau(1, piece)
        in0, in1 = img0.is_subset_of(M), img1.is_subset_of(M)
        if not (in0 or in1):
            bad0 = piece.subtract(M.intersect(IntervalSet.interval(0, HALF)).affine(2))
            bad1 = piece.subtract(
                M.intersect(IntervalSet.interval(HALF, 1)).affine(2, -1)
            )
            counter = bad0.intersect(bad1)
            if counter.is_empty:
                counter = bad0 if not bad0.is_empty else bad1
            raise NotSubordinated(
                f"piece {piece} has no single admissible digit", counter
            )
        digit = 0 if in0 else 1
        img = img0 if in0 else img1
        dest = None
        for j, other in enumerate(partition):
            if img.is_subset_of(other):
                dest = j
                break
        if dest is None:
            raise NotSubordinated(
                f"tau_{digit}({piece}) straddles partition pieces", img
            )
        target.append(dest)
        label.append(digit)
    return PartitionGraph(vertices=list(partition), target=target, label=label)


def discover_partition(
    M: IntervalSet, max_splits: int = DEFAULT_MAX_SPLITS
) -> PartitionGraph:
    """Search for a subordinated partition by boundary-preimage splitting.

    Starts from the maximal intervals of M and repeatedly splits any piece
    whose digit is not constant or whose tau-image straddles piece boundaries;
    split points are the preimages 2b - digit of offending boundaries b.  The
    budget bounds the number of splits; rational filters whose dynamics is not
    resolved within the budget raise :class:`Unpartitionable`.
    """
    zero_piece, _one = chosen_digit_pieces(M)
    zero_bounds = sorted({e for lo, hi in zero_piece.intervals for e in (lo, hi)})

    pieces: List[Tuple[Fraction, Fraction]] = list(M.intervals)
    los: List[Fraction] = [lo for lo, _ in pieces]

    def find(x: Fraction) -> int:
        i = bisect.bisect_right(los, x) - 1
        if 0 <= i < len(pieces) and pieces[i][0] <= x < pieces[i][1]:
            return i
        return -1

    def in_zero(x: Fraction) -> bool:
        i = bisect.bisect_right(zero_bounds, x)
        return i % 2 == 1

    splits = 0
    queue: deque = deque(los)

    def split_at(i: int, xs: List[Fraction]) -> None:
        nonlocal splits
        lo, hi = pieces[i]
        cuts = sorted({x for x in xs if lo < x < hi})
        if not cuts:
            return
        splits += len(cuts)
        edges = [lo] + cuts + [hi]
        parts = [(edges[k], edges[k + 1]) for k in range(len(edges) - 1)]
        pieces[i : i + 1] = parts
        los[i : i + 1] = [p[0] for p in parts]
        for p in parts:
            queue.append(p[0])
        for x in cuts:
            # pieces whose image crosses the new boundary must be rechecked
            for candidate in (2 * x, 2 * x - 1):
                if 0 <= candidate < 1:
                    queue.append(candidate)

    while queue:
        if splits > max_splits:
            raise Unpartitionable(splits)
        x = queue.popleft()
        i = find(x)
        if i < 0:
            continue
        lo, hi = pieces[i]
        # the chosen digit must be constant on the piece
        a = bisect.bisect_right(zero_bounds, lo)
        b = bisect.bisect_left(zero_bounds, hi)
        inner = [zb for zb in zero_bounds[a:b] if lo < zb < hi]
        if inner:
            split_at(i, inner)
            continue
        digit = 0 if in_zero(lo) else 1
        img_lo = (lo + digit) / 2
        img_hi = (hi + digit) / 2
        # boundaries of other pieces strictly inside the image
        j = bisect.bisect_right(los, img_lo) - 1
        cuts = []
        k = max(j, 0)
        while k < len(pieces) and pieces[k][0] < img_hi:
            for e in pieces[k]:
                if img_lo < e < img_hi:
                    cuts.append(2 * e - digit)
            k += 1
        if cuts:
            split_at(i, cuts)

    vertices = [IntervalSet.interval(lo, hi) for lo, hi in pieces]
    target: List[int] = []
    label: List[int] = []
    for lo, hi in pieces:
        digit = 0 if in_zero(lo) else 1
        img_lo = (lo + digit) / 2
        img_hi = (hi + digit) / 2
        j = find(img_lo)
        if j < 0 or img_hi > pieces[j][1]:
            raise NotSubordinated(
                "discovery reached an inconsistent state",
                IntervalSet.interval(img_lo, img_hi),
            )
        target.append(j)
        label.append(digit)
    return PartitionGraph(vertices=vertices, target=target, label=label)


# -- cycles and paths ---------------------------------------------------------------


def graph_cycles(g: PartitionGraph) -> List[Cycle]:
    """Distinct cycles of the functional graph, canonically rotated."""
    n = len(g.vertices)
    seen = [0] * n  # 0 unvisited, 1 on stack, 2 done
    cycles: List[Cycle] = []
    found = set()
    for start in range(n):
        if seen[start]:
            continue
        path = []
        pos: Dict[int, int] = {}
        v = start
        while seen[v] == 0:
            seen[v] = 1
            pos[v] = len(path)
            path.append(v)
            v = g.target[v]
        if seen[v] == 1:  # new cycle
            loop = path[pos[v] :]
            word = "".join(str(g.label[u]) for u in loop)
            cyc = Cycle.from_word(word).canonical()
            key = (cyc.word, cyc.points)
            if key not in found:
                found.add(key)
                cycles.append(cyc)
        for u in path:
            seen[u] = 2
    cycles.sort(key=lambda c: (len(c.word), c.points[0]))
    return cycles


def vertex_tail(g: PartitionGraph, v: int) -> EPWord:
    """The label stream emitted when following edges from vertex v."""
    seq = []
    pos: Dict[int, int] = {}
    u = v
    while u not in pos:
        pos[u] = len(seq)
        seq.append(g.label[u])
        u = g.target[u]
    k = pos[u]
    return EPWord(seq[:k], seq[k:])


def chosen_paths(M: IntervalSet, g: PartitionGraph) -> PiecewisePath:
    """Chosen path of every point of [0,1), as a finite piecewise map.

    The first digit comes from the chosen-digit pieces; afterwards the path
    follows the graph from the vertex containing the first tau-image.
    """
    zero_piece, one_piece = chosen_digit_pieces(M)
    tails = [vertex_tail(g, v) for v in range(len(g.vertices))]

    by_word: Dict[EPWord, IntervalSet] = {}
    for digit, region in ((0, zero_piece), (1, one_piece)):
        for lo, hi in region.intervals:
            img = IntervalSet.interval((lo + digit) / 2, (hi + digit) / 2)
            covered = Fraction(0)
            for v, vertex in enumerate(g.vertices):
                X = img.intersect(vertex)
                if X.is_empty:
                    continue
                covered += X.measure()
                word = tails[v].prepend(digit)
                pre = X.affine(2, -digit)
                by_word[word] = by_word.get(word, IntervalSet.empty()).union(pre)
            if covered != img.measure():
                raise NotSubordinated(
                    "first tau-image is not covered by the graph vertices", img
                )

    pieces = sorted(by_word.items(), key=lambda kv: kv[1].inf)
    result = PiecewisePath(pieces=[(piece, word) for word, piece in pieces])
    total = sum((piece.measure() for piece, _ in result.pieces), Fraction(0))
    union = IntervalSet.empty()
    for piece, _ in result.pieces:
        union = union.union(piece)
    if total != 1 or union != UNIT:
        raise NotSubordinated("chosen paths do not partition [0,1)", union)
    return result


# -- density and cycle certificates ------------------------------------------------


def density_check(M: IntervalSet, F: IntervalSet, paths: PiecewisePath) -> dict:
    """Exact check of the low-pass density conditions (ii) and (v).

    (v): the pieces abutting 0 and 1 carry the constant paths, and every
    piece's tau_0 / tau_1 preimage chain enters them after finitely many
    steps.  (ii): the dilates 2^n F cover a window certified by the geometric
    closure argument.  The remaining equivalent conditions of the density
    proposition are subsumed and reported as such.
    """
    zero_word, one_word = EPWord.zero(), EPWord.one()
    piece0 = next(
        ((p, w) for p, w in paths.pieces if p.contains_point(0)), None
    )
    piece1 = next(((p, w) for p, w in paths.pieces if p.sup == 1), None)
    at_zero = piece0 is not None and piece0[1] == zero_word
    at_one = piece1 is not None and piece1[1] == one_word

    chains = at_zero and at_one
    if chains:
        delta0 = piece0[0].intervals[0][1]
        delta1 = 1 - piece1[0].intervals[-1][0]
        for piece, _ in paths.pieces:
            s, t = piece.inf, piece.sup
            n = 0
            while t > delta0 and n < 256:
                t /= 2
                n += 1
            ok0 = t <= delta0
            u = 1 - s
            n = 0
            while u > delta1 and n < 256:
                u /= 2
                n += 1
            chains = chains and ok0 and u <= delta1

    condition_v = at_zero and at_one and chains

    condition_ii = False
    if not F.is_empty:
        w = max(abs(F.inf), abs(F.sup))
        window = IntervalSet(
            [(-(1 << 8) * w, -Fraction(1, 1 << 8)), (Fraction(1, 1 << 8), (1 << 8) * w)]
        )
        covered = IntervalSet.empty()
        for n in range(1, 80):
            covered = covered.union(F.affine(1 << n))
            if window.subtract(covered).is_empty:
                condition_ii = True
                break

    return {
        "condition_ii": condition_ii,
        "condition_v": condition_v,
        "passes": condition_ii and condition_v,
        "checked": ["ii", "v"],
        "subsumed_by_equivalence": ["i", "iii", "iv", "vi"],
    }


def interior_radius(M: IntervalSet, theta: Fraction) -> Optional[Fraction]:
    """Radius of an interval neighbourhood of theta inside M, if any.

    The endpoint cycles use one-sided neighbourhoods: [0, eps) for theta = 0
    and [1 - eps, 1) for theta = 1, matching the tau_0 / tau_1 dynamics.
    """
    if theta == 0:
        hit = M.piece_containing(Fraction(0))
        return None if hit is None else hit[1]
    if theta == 1:
        for lo, hi in M.intervals:
            if hi == 1:
                return 1 - lo
        return None
    hit = M.piece_containing(theta)
    if hit is None:
        return None
    lo, hi = hit
    if lo < theta:
        return min(theta - lo, hi - theta)
    return None


def cycle_subrep_check(M: IntervalSet, C: Cycle, n_max: int = 64) -> bool:
    """Certify that the cycle's symbolic component embeds in the dynamics.

    Sufficient condition: every cycle point interior to M, so the p-fold
    contraction drives all of [0,1) into filter-certified neighbourhoods of
    the cycle.  The contraction is iterated exactly until the whole interval
    sits inside M along all p rotations, or n_max is exhausted.
    """
    if any(interior_radius(M, theta) is None for theta in C.points):
        return False
    p = len(C.word)
    theta0 = C.points[0]
    J = IntervalSet.interval(0, 1)
    for _ in range(n_max):
        J = J.affine(Fraction(1, 1 << p), theta0 * (1 - Fraction(1, 1 << p)))
        if all(
            J.affine(1 << i).mod1().is_subset_of(M) for i in range(p)
        ):
            return True
    return False
