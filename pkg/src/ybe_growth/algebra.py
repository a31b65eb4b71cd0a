"""Finite groups as multiplication tables, conjugacy-class machinery,
quandle-type Yang-Baxter solutions, and set partitions.

Groups keep element 0 as the identity.  Small groups (n <= DENSE_LIMIT)
materialise the full multiplication table as a numpy array; larger ones
compose elements directly and cache rows on demand.
"""

from __future__ import annotations

import itertools
import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from .series import TruncatedSeries

DENSE_LIMIT = 2100


class Permutation:
    """Permutation of {0..d-1}; composition applies the right factor first."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        imgs = tuple(int(x) for x in images)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError(f"not a permutation: {images!r}")
        self.images = imgs

    @classmethod
    def identity(cls, d: int) -> "Permutation":
        return cls(range(d))

    @classmethod
    def transposition(cls, d: int, i: int, j: int) -> "Permutation":
        imgs = list(range(d))
        imgs[i], imgs[j] = imgs[j], imgs[i]
        return cls(imgs)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(self.images[x] for x in other.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def inverse(self) -> "Permutation":
        imgs = [0] * len(self.images)
        for i, x in enumerate(self.images):
            imgs[x] = i
        return Permutation(imgs)

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.images[x]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_count(self) -> int:
        """Number of cycles, fixed points included."""
        return len(self.cycles(include_fixed=True))

    def transposition_length(self) -> int:
        """Minimal number of transpositions: d - (number of cycles)."""
        return len(self.images) - self.cycle_count()

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles(include_fixed=True)), reverse=True))

    def is_transposition(self) -> bool:
        cyc = self.cycles()
        return len(cyc) == 1 and len(cyc[0]) == 2

    def label(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "e"
        return "".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in cyc)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation{self.images}"


@dataclass(frozen=True)
class ConjugacyDecomposition:
    """Conjugacy classes of a group: class 0 = {identity}, the rest ordered
    by (size, minimal element index)."""

    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    inverse_class: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.classes)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def class_containing(self, element: int) -> int:
        return self.class_of[element]


class FiniteGroupTable:
    """A finite group given by its multiplication structure.

    Either a dense numpy table is stored, or a pair-multiplication callable
    with a lazy row cache for groups too large to tabulate eagerly.
    """

    def __init__(
        self,
        size: int,
        *,
        table: Optional[np.ndarray] = None,
        pair_mul: Optional[Callable[[int, int], int]] = None,
        inverses: Optional[Sequence[int]] = None,
        labels: Optional[Sequence[str]] = None,
        name: str = "G",
        validate: bool = True,
    ):
        if size <= 0:
            raise ValueError("group size must be positive")
        if table is None and pair_mul is None:
            raise ValueError("need a multiplication table or a pair product")
        self.size = size
        self.name = name
        self._table = None if table is None else np.asarray(table, dtype=np.int64)
        self._pair_mul = pair_mul
        self._row_cache: dict[int, np.ndarray] = {}
        self.labels = list(labels) if labels is not None else [str(i) for i in range(size)]
        if len(self.labels) != size:
            raise ValueError("label count does not match group size")
        if inverses is not None:
            self._inv = list(int(x) for x in inverses)
        else:
            self._inv = self._compute_inverses()
        self._classes: Optional[ConjugacyDecomposition] = None
        self._commutator: Optional[tuple[int, ...]] = None
        if validate:
            self._validate()

    # -- core operations ---------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        if self._table is not None:
            return int(self._table[a, b])
        row = self._row_cache.get(a)
        if row is not None:
            return int(row[b])
        return self._pair_mul(a, b)

    def row(self, a: int) -> np.ndarray:
        if self._table is not None:
            return self._table[a]
        row = self._row_cache.get(a)
        if row is None:
            row = np.fromiter(
                (self._pair_mul(a, b) for b in range(self.size)), dtype=np.int64, count=self.size
            )
            self._row_cache[a] = row
        return row

    def inv(self, a: int) -> int:
        return self._inv[a]

    def conjugate(self, a: int, b: int) -> int:
        """a b a^-1."""
        return self.mul(self.mul(a, b), self._inv[a])

    def elements(self) -> range:
        return range(self.size)

    def label(self, a: int) -> str:
        return self.labels[a]

    # -- construction helpers ----------------------------------------------

    def _compute_inverses(self) -> list[int]:
        inv = [-1] * self.size
        for a in range(self.size):
            if inv[a] >= 0:
                continue
            row = self.row(a)
            hits = np.flatnonzero(row == 0)
            if len(hits) != 1:
                raise ValueError(f"element {a} has {len(hits)} right inverses")
            b = int(hits[0])
            inv[a] = b
            inv[b] = a
        return inv

    def _validate(self) -> None:
        if self.mul(0, 0) != 0:
            raise ValueError("element 0 is not idempotent, cannot be the identity")
        n = self.size
        probe = range(n) if n <= 64 else random.Random(0).sample(range(n), 48)
        for a in probe:
            if self.mul(a, 0) != a or self.mul(0, a) != a:
                raise ValueError("element 0 is not a two-sided identity")
            b = self._inv[a]
            if self.mul(a, b) != 0 or self.mul(b, a) != 0:
                raise ValueError(f"inverse table wrong at element {a}")
        if self._table is not None:
            ident = np.arange(n)
            for a in range(n):
                row = self._table[a]
                if row.min() < 0 or row.max() >= n:
                    raise ValueError("table entry out of range")
                if not np.array_equal(np.sort(row), ident):
                    raise ValueError(f"row {a} is not a permutation of the group")
            col_sorted = np.sort(self._table, axis=0)
            if not np.array_equal(col_sorted, np.tile(ident[:, None], (1, n))):
                raise ValueError("some column is not a permutation of the group")
        # Associativity: full check only for tiny groups, sampled otherwise.
        rng = random.Random(1)
        if n <= 24:
            triples = itertools.product(range(n), repeat=3)
        else:
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(2000))
        for a, b, c in triples:
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise ValueError(f"associativity fails at ({a},{b},{c})")

    # -- conjugacy and commutators ------------------------------------------

    def conjugacy_classes(self) -> ConjugacyDecomposition:
        if self._classes is not None:
            return self._classes
        n = self.size
        hint = getattr(self, "_symmetric_cycle_classes", None)
        if hint is not None:
            raw = [sorted(members) for members in hint.values()]
            class_of = [-1] * n
            for ci, members in enumerate(raw):
                for x in members:
                    class_of[x] = ci
            return self._finish_classes(raw, class_of)
        class_of = [-1] * n
        raw: list[list[int]] = []
        for start in range(n):
            if class_of[start] >= 0:
                continue
            orbit = {start}
            stack = [start]
            class_of[start] = len(raw)
            while stack:
                x = stack.pop()
                for h in range(n):
                    y = self.conjugate(h, x)
                    if y not in orbit:
                        orbit.add(y)
                        class_of[y] = len(raw)
                        stack.append(y)
            raw.append(sorted(orbit))
        return self._finish_classes(raw, class_of)

    def _finish_classes(
        self, raw: list[list[int]], class_of: list[int]
    ) -> ConjugacyDecomposition:
        n = self.size
        ident_cls = class_of[0]
        rest = sorted(
            (c for i, c in enumerate(raw) if i != ident_cls), key=lambda c: (len(c), c[0])
        )
        classes = [tuple(raw[ident_cls])] + [tuple(c) for c in rest]
        new_class_of = [-1] * n
        for ci, members in enumerate(classes):
            for x in members:
                new_class_of[x] = ci
        inverse_class = tuple(new_class_of[self._inv[c[0]]] for c in classes)
        self._classes = ConjugacyDecomposition(
            classes=tuple(classes),
            class_of=tuple(new_class_of),
            inverse_class=inverse_class,
        )
        return self._classes

    def _perm_ranker(self):
        """(image matrix, rank function) for groups carrying permutation
        structure; lets n^2-size computations run as numpy batches."""
        mat = np.array([p.images for p in self.permutations], dtype=np.int64)
        d = mat.shape[1]
        radix = np.array([d**k for k in range(d - 1, -1, -1)], dtype=np.int64)
        codes = mat @ radix
        order = np.argsort(codes)
        sorted_codes = codes[order]

        def rank(rows: np.ndarray) -> np.ndarray:
            return order[np.searchsorted(sorted_codes, rows @ radix)]

        return mat, rank

    def commutator_subgroup(self) -> tuple[int, ...]:
        """Closure of all commutators [a,b] under multiplication."""
        if self._commutator is not None:
            return self._commutator
        gens = sorted(self.commutator_set())
        members = set(gens) | {0}
        frontier = list(members)
        if self._table is None and hasattr(self, "permutations"):
            mat, rank = self._perm_ranker()
            gen_mat = mat[gens]
            while frontier:
                x = frontier.pop()
                for y in rank((mat[x])[gen_mat]).tolist():
                    if y not in members:
                        members.add(y)
                        frontier.append(y)
        else:
            while frontier:
                x = frontier.pop()
                for g in gens:
                    y = self.mul(x, g)
                    if y not in members:
                        members.add(y)
                        frontier.append(y)
        self._commutator = tuple(sorted(members))
        return self._commutator

    def commutator_set(self) -> set[int]:
        """All single commutators a b a^-1 b^-1."""
        n = self.size
        if self._table is None and hasattr(self, "permutations"):
            # batch the n^2 commutators row by row through permutation images
            mat, rank = self._perm_ranker()
            inv = np.array(self._inv, dtype=np.int64)
            out: set[int] = set()
            for a in range(n):
                ab = (mat[a])[mat]  # (p_a * p_b)(i) = p_a[p_b[i]]
                ba = mat[:, mat[a]]  # (p_b * p_a)(i) = p_b[p_a[i]]
                inv_ba = mat[inv[rank(ba)]]
                comm = np.take_along_axis(ab, inv_ba, axis=1)
                out.update(rank(comm).tolist())
            return out
        out = set()
        for a in range(n):
            ra = self.row(a)
            for b in range(n):
                ab = int(ra[b])
                ba = self.mul(b, a)
                out.add(self.mul(ab, self._inv[ba]))
        return out

    # -- serialisation -------------------------------------------------------

    def to_json(self) -> dict:
        if self._table is None:
            raise ValueError(f"group {self.name} is too large to serialise as a table")
        return {
            "name": self.name,
            "size": self.size,
            "labels": self.labels,
            "mult": self._table.tolist(),
            "inv": list(self._inv),
        }

    @classmethod
    def from_json(cls, data: dict) -> "FiniteGroupTable":
        return cls(
            int(data["size"]),
            table=np.asarray(data["mult"], dtype=np.int64),
            inverses=data.get("inv"),
            labels=data.get("labels"),
            name=data.get("name", "G"),
        )

    def __repr__(self):
        return f"FiniteGroupTable({self.name}, size={self.size})"


def commutator_subgroup(group: FiniteGroupTable) -> tuple[int, ...]:
    return group.commutator_subgroup()


def conjugacy_classes(group: FiniteGroupTable) -> ConjugacyDecomposition:
    return group.conjugacy_classes()


def class_product_table(
    group: FiniteGroupTable, dec: ConjugacyDecomposition
) -> list[list[int]]:
    """Bitmask table: entry (i,j) marks the classes meeting C_i * C_j.

    Since class products are conjugation-invariant, the classes meeting
    rep * C_j for one fixed representative of C_i already give all of them.
    """
    c = dec.count
    table = [[0] * c for _ in range(c)]
    for i in range(c):
        rep = dec.classes[i][0]
        for j in range(c):
            mask = 0
            for y in dec.classes[j]:
                mask |= 1 << dec.class_of[group.mul(rep, y)]
            table[i][j] = mask
    for i in range(c):
        for j in range(c):
            if table[i][j] != table[j][i]:
                raise AssertionError("class product table is not symmetric")
    return table


# -- standard groups ---------------------------------------------------------


def make_symmetric_group(d: int) -> FiniteGroupTable:
    """S_d as a table group; elements sorted by image tuple (identity first)."""
    if not 1 <= d <= 8:
        raise ValueError("symmetric group supported for 1 <= d <= 8")
    perms = [Permutation(p) for p in sorted(itertools.permutations(range(d)))]
    index = {p.images: i for i, p in enumerate(perms)}
    n = len(perms)
    labels = [p.label() for p in perms]

    def pair_mul(a: int, b: int) -> int:
        return index[(perms[a] * perms[b]).images]

    table = None
    if n <= DENSE_LIMIT:
        mat = np.array([p.images for p in perms], dtype=np.int64)
        codes = mat @ np.array([d**k for k in range(d - 1, -1, -1)], dtype=np.int64)
        order = np.argsort(codes)
        sorted_codes = codes[order]
        radix = np.array([d**k for k in range(d - 1, -1, -1)], dtype=np.int64)
        table = np.empty((n, n), dtype=np.int64)
        for a in range(n):
            # composition (p_a * p_b)(i) = p_a[p_b[i]]: image rows mat[a][mat[b]]
            prod_codes = (mat[a])[mat] @ radix
            table[a] = order[np.searchsorted(sorted_codes, prod_codes)]
    inverses = [index[p.inverse().images] for p in perms]
    group = FiniteGroupTable(
        n,
        table=table,
        pair_mul=pair_mul if table is None else None,
        inverses=inverses,
        labels=labels,
        name=f"S{d}",
        validate=table is not None,
    )
    group.permutations = perms  # structural hint for class shortcuts
    if table is None:
        cycle_types: dict[tuple[int, ...], list[int]] = {}
        for i, p in enumerate(perms):
            cycle_types.setdefault(p.cycle_type(), []).append(i)
        group._symmetric_cycle_classes = cycle_types
    return group


def symmetric_transpositions(group: FiniteGroupTable) -> tuple[int, ...]:
    """Indices of the transpositions inside a group built by make_symmetric_group."""
    return tuple(i for i, p in enumerate(group.permutations) if p.is_transposition())


def make_dihedral_group(d: int) -> FiniteGroupTable:
    """D_d with rotations at indices 0..d-1 and reflections at d..2d-1.

    Reflection s_i is the reflection fixing vertex i (odd d); for even d the
    indices follow the same abstract rule s_i s_j = rho^(i-j), under which
    conjугation acts as s_i > s_j = s_{2i-j} for every d.
    """
    if not 1 <= d <= 1000:
        raise ValueError("dihedral group supported for 1 <= d <= 1000")
    n = 2 * d
    idx = np.arange(d)
    table = np.empty((n, n), dtype=np.int64)
    # rotation * rotation, rotation * reflection, reflection * rotation, refl * refl
    table[:d, :d] = (idx[:, None] + idx[None, :]) % d
    table[:d, d:] = d + (idx[None, :] + idx[:, None]) % d
    table[d:, :d] = d + (idx[:, None] - idx[None, :]) % d
    table[d:, d:] = (idx[:, None] - idx[None, :]) % d
    labels = ["e"] + [f"r{k}" for k in range(1, d)] + [f"s{i}" for i in range(d)]
    return FiniteGroupTable(n, table=table, labels=labels, name=f"D{d}")


def dihedral_reflections(group: FiniteGroupTable) -> tuple[int, ...]:
    d = group.size // 2
    return tuple(range(d, 2 * d))


# -- quandle solutions --------------------------------------------------------


class QuandleSolution:
    """A finite quandle (X, >) presented as the YBE solution (x,y) -> (x>y, x).

    Validation runs on construction: left translations must be bijections,
    the operation idempotent, and self-distributivity must hold (exhaustively
    for n <= 64, on a deterministic sample beyond that).
    """

    __slots__ = ("op", "labels")

    def __init__(self, op: Sequence[Sequence[int]], labels: Optional[Sequence] = None):
        table = tuple(tuple(int(v) for v in row) for row in op)
        n = len(table)
        if any(len(row) != n for row in table):
            raise ValueError("operation table is not square")
        self.op = table
        self.labels = tuple(labels) if labels is not None else tuple(range(n))
        if len(self.labels) != n:
            raise ValueError("label count does not match solution size")
        self._validate()

    @property
    def size(self) -> int:
        return len(self.op)

    def apply(self, x: int, y: int) -> int:
        return self.op[x][y]

    def _validate(self) -> None:
        n = self.size
        full = set(range(n))
        for x in range(n):
            if set(self.op[x]) != full:
                raise ValueError(f"left translation by {x} is not a bijection")
            if self.op[x][x] != x:
                raise ValueError(f"idempotence fails at {x}")
        if n <= 64:
            triples = itertools.product(range(n), repeat=3)
        else:
            rng = random.Random(n)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(200000))
        for x, y, z in triples:
            if self.op[x][self.op[y][z]] != self.op[self.op[x][y]][self.op[x][z]]:
                raise ValueError(f"self-distributivity fails at ({x},{y},{z})")

    def yang_baxter_map(self, x: int, y: int) -> tuple[int, int]:
        return self.op[x][y], x

    def to_json(self) -> dict:
        return {"size": self.size, "op": [list(r) for r in self.op], "labels": list(map(str, self.labels))}

    @classmethod
    def from_json(cls, data) -> "QuandleSolution":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["op"], labels=data.get("labels"))

    def __repr__(self):
        return f"QuandleSolution(size={self.size})"


def conjugation_solution(group: FiniteGroupTable, subset: Iterable[int]) -> QuandleSolution:
    """The conjugation quandle x > y = x y x^-1 on a conjugation-closed subset."""
    elems = sorted(set(int(x) for x in subset))
    pos = {x: i for i, x in enumerate(elems)}
    op = []
    for x in elems:
        row = []
        for y in elems:
            z = group.conjugate(x, y)
            if z not in pos:
                raise ValueError(f"subset not closed under conjugation: {x} > {y} = {z}")
            row.append(pos[z])
        op.append(row)
    return QuandleSolution(op, labels=[group.label(x) for x in elems])


def reflection_solution(d: int) -> QuandleSolution:
    """The dihedral rule x > y = 2x - y on Z_d."""
    if d < 1:
        raise ValueError("d must be at least 1")
    op = [[(2 * x - y) % d for y in range(d)] for x in range(d)]
    return QuandleSolution(op, labels=list(range(d)))


def transposition_solution(d: int) -> QuandleSolution:
    """Conjugation quandle on the transpositions of S_d, letters = sorted pairs."""
    pairs = [(i, j) for i in range(d) for j in range(i + 1, d)]
    pos = {p: k for k, p in enumerate(pairs)}

    def act(p, q):
        i, j = p
        a, b = q
        swap = lambda x: j if x == i else i if x == j else x
        u, v = swap(a), swap(b)
        return (u, v) if u < v else (v, u)

    op = [[pos[act(p, q)] for q in pairs] for p in pairs]
    return QuandleSolution(op, labels=pairs)


def full_conjugation_solution(group: FiniteGroupTable) -> QuandleSolution:
    return conjugation_solution(group, group.elements())


# -- word length BFS ----------------------------------------------------------


def generic_length_series(
    group: FiniteGroupTable, generators: Iterable[int], max_order: int
) -> tuple[TruncatedSeries, bool]:
    """Sphere sizes of the Cayley graph w.r.t. generators and their inverses.

    Returns (series, covered): coefficient n counts elements at distance
    exactly n; covered is False when the generators fail to reach the whole
    group within max_order.
    """
    gens = sorted({g for x in generators for g in (int(x), group.inv(int(x)))})
    dist = {0: 0}
    frontier = [0]
    counts = [1] + [0] * max_order
    for n in range(1, max_order + 1):
        nxt = []
        for g in frontier:
            for s in gens:
                h = group.mul(g, s)
                if h not in dist:
                    dist[h] = n
                    nxt.append(h)
        counts[n] = len(nxt)
        frontier = nxt
        if not frontier:
            break
    covered = len(dist) == group.size
    return TruncatedSeries(Fraction(c) for c in counts), covered


# -- set partitions -----------------------------------------------------------


@dataclass(frozen=True)
class SetPartition:
    """Partition of {0..n-1}; blocks sorted by minimum, elements ascending."""

    blocks: tuple[tuple[int, ...], ...]
    ground_size: int

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], ground_size: int) -> "SetPartition":
        norm = tuple(sorted((tuple(sorted(set(b))) for b in blocks if b), key=lambda b: b[0]))
        seen = [x for b in norm for x in b]
        if sorted(seen) != list(range(ground_size)):
            raise ValueError("blocks do not partition the ground set")
        return cls(norm, ground_size)

    @classmethod
    def singletons(cls, ground_size: int) -> "SetPartition":
        return cls(tuple((i,) for i in range(ground_size)), ground_size)

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def block_sizes(self) -> tuple[int, ...]:
        """Sizes as a descending integer partition of the ground size."""
        return tuple(sorted((len(b) for b in self.blocks), reverse=True))

    def block_of(self, x: int) -> int:
        for i, b in enumerate(self.blocks):
            if x in b:
                return i
        raise KeyError(x)

    def is_full(self) -> bool:
        return self.block_count == 1

    def join(self, other: "SetPartition") -> "SetPartition":
        """Finest common coarsening (gluing intersecting blocks)."""
        if self.ground_size != other.ground_size:
            raise ValueError("partitions live on different ground sets")
        parent = list(range(self.ground_size))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)

        for part in (self.blocks, other.blocks):
            for b in part:
                for x in b[1:]:
                    union(b[0], x)
        groups: dict[int, list[int]] = {}
        for x in range(self.ground_size):
            groups.setdefault(find(x), []).append(x)
        return SetPartition.from_blocks(groups.values(), self.ground_size)

    def __str__(self):
        return "{" + ", ".join("{" + ",".join(str(x + 1) for x in b) + "}" for b in self.blocks) + "}"


def enumerate_set_partitions(d: int) -> Iterable[SetPartition]:
    """All set partitions of {0..d-1}, generated in restricted-growth order."""
    if d == 0:
        yield SetPartition((), 0)
        return

    def rec(i: int, blocks: list[list[int]]):
        if i == d:
            yield SetPartition.from_blocks([list(b) for b in blocks], d)
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1, blocks)
        blocks.pop()

    yield from rec(0, [])


def integer_partitions(d: int) -> Iterable[tuple[int, ...]]:
    """Partitions of d as descending tuples."""
    if d == 0:
        yield ()
        return

    def rec(remaining: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield prefix
            return
        for part in range(min(cap, remaining), 0, -1):
            yield from rec(remaining - part, part, prefix + (part,))

    yield from rec(d, d, ())


def integer_partition_multiplicity(lam: Sequence[int], d: int) -> int:
    """Number of set partitions of a d-set whose block sizes form lam."""
    lam = tuple(sorted(lam, reverse=True))
    if sum(lam) != d:
        raise ValueError(f"{lam} is not a partition of {d}")
    count = math.factorial(d)
    for part in lam:
        count //= math.factorial(part)
    for mult in _multiplicities(lam).values():
        count //= math.factorial(mult)
    return count


def _multiplicities(lam: Sequence[int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for part in lam:
        out[part] = out.get(part, 0) + 1
    return out
