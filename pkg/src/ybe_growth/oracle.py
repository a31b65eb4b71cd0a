"""Brute-force ground truth: word-orbit enumeration for structure monoids and
sphere counting for structure groups embedded in (finite group) x Z^k.

Orbits are computed per word length (braiding moves preserve length), with
words encoded as base-|X| integers so that numeric order equals lexicographic
order.  Components of the move graph are found with scipy's connected
components; orbit representatives are the minimal encoded words, which keeps
every result schedule-independent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .algebra import FiniteGroupTable, QuandleSolution

DEFAULT_WORD_BUDGET = 10**7
DEFAULT_STATE_BUDGET = 10**8


class BudgetExceededError(RuntimeError):
    """Raised when an enumeration would exceed its state budget."""


def encode_word(word: Sequence[int], base: int) -> int:
    code = 0
    for letter in word:
        code = code * base + letter
    return code


def decode_word(code: int, base: int, length: int) -> tuple[int, ...]:
    out = [0] * length
    for pos in range(length - 1, -1, -1):
        code, out[pos] = divmod(code, base)
    return tuple(out)


def _orbit_labels(sol: QuandleSolution, length: int) -> tuple[np.ndarray, int]:
    """Component labels of all words of one length under braiding moves."""
    base = sol.size
    count = base**length
    if length < 2:
        return np.arange(count, dtype=np.int64), count
    op = np.asarray(sol.op, dtype=np.int64)
    codes = np.arange(count, dtype=np.int64)
    rows = []
    cols = []
    for pos in range(length - 1):
        # letters at positions pos, pos+1 in big-endian encoding
        p_hi = base ** (length - 1 - pos)
        p_lo = base ** (length - 2 - pos)
        x = (codes // p_hi) % base
        y = (codes // p_lo) % base
        moved = codes + (op[x, y] - x) * p_hi + (x - y) * p_lo
        rows.append(codes)
        cols.append(moved)
    graph = coo_matrix(
        (np.ones(count * (length - 1), dtype=np.int8), (np.concatenate(rows), np.concatenate(cols))),
        shape=(count, count),
    )
    n_components, labels = connected_components(graph, directed=False)
    return labels.astype(np.int64), n_components


@dataclass
class OrbitEnumeration:
    """Orbit counts and canonical representatives of words per length."""

    solution: QuandleSolution
    requested_length: int
    max_length: int  # last length actually enumerated
    counts: list[int] = field(default_factory=list)
    representatives: list[list[tuple[int, ...]]] = field(default_factory=list)
    _labels: list[Optional[np.ndarray]] = field(default_factory=list)
    truncated: bool = False

    def orbit_id(self, word: Sequence[int]) -> tuple[int, int]:
        """(length, orbit index) of a word; orbits are per-length."""
        n = len(word)
        if n > self.max_length:
            raise ValueError(f"length {n} beyond enumerated range {self.max_length}")
        labels = self._labels[n]
        if labels is None:
            return n, encode_word(word, self.solution.size)
        return n, int(labels[encode_word(word, self.solution.size)])

    def same_orbit(self, w1: Sequence[int], w2: Sequence[int]) -> bool:
        if len(w1) != len(w2):
            return False
        return self.orbit_id(w1) == self.orbit_id(w2)

    def series_coefficients(self) -> list[int]:
        return list(self.counts)


def monoid_orbit_enumerate(
    sol: QuandleSolution, max_length: int, budget: int = DEFAULT_WORD_BUDGET
) -> OrbitEnumeration:
    """Count braiding-move orbits of words of each length up to max_length.

    Words of a fixed length are merged under moves (..., x, y, ...) <->
    (..., x>y, x, ...) at every position.  Stops early (flagging the result
    as truncated) once the cumulative word count would exceed the budget.
    """
    result = OrbitEnumeration(sol, max_length, max_length)
    base = sol.size
    spent = 0
    reached = -1
    for n in range(max_length + 1):
        word_count = base**n
        if spent + word_count > budget:
            result.truncated = True
            break
        spent += word_count
        labels, n_orbits = _orbit_labels(sol, n)
        result.counts.append(n_orbits)
        if n < 2:
            result._labels.append(None)
            reps = [decode_word(c, base, n) for c in range(word_count)]
        else:
            result._labels.append(labels)
            min_code = np.full(n_orbits, word_count, dtype=np.int64)
            np.minimum.at(min_code, labels, np.arange(word_count, dtype=np.int64))
            reps = [decode_word(int(c), base, n) for c in np.sort(min_code)]
        result.representatives.append(reps)
        reached = n
    result.max_length = reached
    return result


def orbit_equal(
    sol: QuandleSolution,
    w1: Sequence[int],
    w2: Sequence[int],
    budget: int = DEFAULT_WORD_BUDGET,
) -> bool:
    """Whether two words are related by braiding moves (always false across
    different lengths, since moves preserve length)."""
    if len(w1) != len(w2):
        return False
    if tuple(w1) == tuple(w2):
        return True
    if sol.size ** len(w1) > budget:
        raise BudgetExceededError(f"word space {sol.size}^{len(w1)} exceeds budget {budget}")
    labels, _ = _orbit_labels(sol, len(w1))
    base = sol.size
    return labels[encode_word(w1, base)] == labels[encode_word(w2, base)]


@dataclass
class BallEnumeration:
    """Sphere sizes of the subgroup generated inside (group) x Z^rank."""

    generators: list[tuple[int, tuple[int, ...]]]
    radius: int
    sphere_sizes: list[int]
    states: int


def group_ball_enumerate(
    generators: Iterable[tuple[int, Sequence[int]]],
    group: FiniteGroupTable,
    radius: int,
    budget: int = DEFAULT_STATE_BUDGET,
) -> BallEnumeration:
    """BFS sphere sizes from the identity, using generators and inverses.

    Each generator is a pair (group element, lattice vector); its inverse is
    (inverse element, negated vector).  Any generator moves the lattice part
    by one unit in one coordinate, so states at distance n satisfy |v|_1 <= n
    automatically.
    """
    gens = []
    seen_gens = set()
    for g, vec in generators:
        for elem, v in ((int(g), tuple(int(c) for c in vec)), (group.inv(int(g)), tuple(-int(c) for c in vec))):
            if (elem, v) not in seen_gens:
                seen_gens.add((elem, v))
                gens.append((elem, v))
    rank = len(gens[0][1]) if gens else 0
    if any(len(v) != rank for _, v in gens):
        raise ValueError("lattice vectors have mismatched ranks")
    start = (0, (0,) * rank)
    dist = {start}
    frontier = [start]
    spheres = [1]
    for n in range(1, radius + 1):
        nxt = []
        for g, v in frontier:
            for s, w in gens:
                state = (group.mul(g, s), tuple(a + b for a, b in zip(v, w)))
                if state not in dist:
                    dist.add(state)
                    nxt.append(state)
        if len(dist) > budget:
            raise BudgetExceededError(f"ball enumeration exceeded {budget} states")
        spheres.append(len(nxt))
        frontier = nxt
    return BallEnumeration(list(gens), radius, spheres, len(dist))


def conjugation_ball_generators(
    group: FiniteGroupTable, subset: Sequence[int]
) -> list[tuple[int, tuple[int, ...]]]:
    """Generators (x, unit vector of the conjugacy class of x) for the
    structure group of the conjugation solution on the subset."""
    dec = group.conjugacy_classes()
    classes = sorted({dec.class_of[x] for x in subset})
    coord = {c: i for i, c in enumerate(classes)}
    rank = len(classes)
    gens = []
    for x in subset:
        vec = [0] * rank
        vec[coord[dec.class_of[x]]] = 1
        gens.append((int(x), tuple(vec)))
    return gens


def conjugation_ball_series(
    group: FiniteGroupTable,
    subset: Sequence[int],
    radius: int,
    budget: int = DEFAULT_STATE_BUDGET,
) -> list[int]:
    """Sphere sizes of the structure group of a conjugation solution."""
    gens = conjugation_ball_generators(group, subset)
    ball = group_ball_enumerate(gens, group, radius, budget)
    return ball.sphere_sizes


# -- orbits over the infinite reflection solution ------------------------------


def _reflection_moves(word: tuple[int, ...], lo: int, hi: int):
    for pos in range(len(word) - 1):
        x, y = word[pos], word[pos + 1]
        fwd = 2 * x - y
        if lo <= fwd <= hi:
            yield word[:pos] + (fwd, x) + word[pos + 2 :]
        back = 2 * y - x
        if lo <= back <= hi:
            yield word[:pos] + (y, back) + word[pos + 2 :]


def reflection_orbit_closure(
    word: Sequence[int], margin: int = 8, max_states: int = 500000
) -> set[tuple[int, ...]]:
    """Braiding orbit of a word over the integers, restricted to the letter
    window [min - margin, max + margin]."""
    start = tuple(int(a) for a in word)
    if not start:
        return {start}
    lo, hi = min(start) - margin, max(start) + margin
    closure = {start}
    stack = [start]
    while stack:
        w = stack.pop()
        for moved in _reflection_moves(w, lo, hi):
            if moved not in closure:
                if len(closure) >= max_states:
                    raise BudgetExceededError("reflection orbit closure exceeded state cap")
                closure.add(moved)
                stack.append(moved)
    return closure


def reflection_orbit_equal_infinite(
    w1: Sequence[int], w2: Sequence[int], margin: int = 8, max_states: int = 500000
) -> bool:
    """Window-limited orbit equality over the integers.

    The orbit of the pair is closed inside a letter window which is doubled
    until the two-orbit verdict has stabilised twice; stability is reported,
    not proven (a connecting path could in principle need letters beyond the
    widest window tried).
    """
    a, b = tuple(int(x) for x in w1), tuple(int(x) for x in w2)
    if len(a) != len(b):
        return False
    if a == b:
        return True
    window = margin + max(abs(x) for x in b)
    for _ in range(3):  # initial window plus two stability confirmations
        closure = reflection_orbit_closure(a, window, max_states)
        if b in closure:
            return True
        window *= 2
    return False
