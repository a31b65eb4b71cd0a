"""Growth series of structure groups: the class-2 lift, Solomon's product,
closed forms for transposition and reflection solutions, and the defect-series
engine for full conjugation solutions.

The defect engine works with class-index bitmasks throughout: element-level
products are used once to build the pairwise class product table, after which
a product of conjugacy classes is an O(c) bitmask fold.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .algebra import (
    ConjugacyDecomposition,
    FiniteGroupTable,
    class_product_table,
)
from .series import (
    ONE,
    Polynomial,
    RationalGF,
    T,
    TruncatedSeries,
    expand_rational,
)
from .oracle import BudgetExceededError

ONE_MINUS_T = ONE - T
ONE_PLUS_T = ONE + T
ONE_MINUS_T2 = ONE - T**2
ONE_PLUS_T2 = ONE + T**2

DEFAULT_DEFECT_BUDGET = 10**6


def class2_lift(
    small: Union[RationalGF, TruncatedSeries],
) -> Union[RationalGF, TruncatedSeries]:
    """Turn the growth series of (G, C) into the growth series of As(C), for a
    class-2 conjugation presentation: (1+t^2)/(1-t^2) * G + t * G'."""
    if isinstance(small, RationalGF):
        n, d = small.num, small.den
        deriv_num = n.derivative() * d - n * d.derivative()
        num = ONE_PLUS_T2 * n * d + (deriv_num * ONE_MINUS_T2).shift(1)
        return RationalGF(num, ONE_MINUS_T2 * d * d)
    if isinstance(small, TruncatedSeries):
        if small.order < 1:
            raise ValueError("class-2 lift needs truncation order at least 1")
        factor = expand_rational(RationalGF(ONE_PLUS_T2, ONE_MINUS_T2), small.order)
        # t * d/dt at full order: coefficient n is n * c_n
        t_deriv = TruncatedSeries(
            [Fraction(0)] + [n * small[n] for n in range(1, small.order + 1)]
        )
        return factor * small + t_deriv
    raise TypeError("expected a RationalGF or TruncatedSeries")


def solomon_series(d: int) -> RationalGF:
    """prod_{k=1}^{d-1} (1 + k t): the length generating polynomial of S_d
    over transpositions; satisfies G_{d+1} = (1 + d t) G_d."""
    if d < 1:
        raise ValueError("d must be at least 1")
    poly = ONE
    for k in range(1, d):
        poly = poly * Polynomial([1, k])
    return RationalGF(poly)


def as_transpositions_group_gf(d: int) -> RationalGF:
    """Growth series of the structure group of the transposition solution,
    assembled over the common denominator (1 - t)."""
    if d < 2:
        raise ValueError("d must be at least 2")
    prod_from_2 = ONE
    for k in range(2, d):
        prod_from_2 = prod_from_2 * Polynomial([1, k])
    weighted = Polynomial()
    for k in range(1, d):
        term = Polynomial([k])
        for j in range(1, d):
            if j != k:
                term = term * Polynomial([1, j])
        weighted = weighted + term
    num = prod_from_2 * ONE_PLUS_T2 + (weighted * ONE_MINUS_T).shift(1)
    return RationalGF(num, ONE_MINUS_T)


def as_reflections_group_gf(d: int) -> RationalGF:
    """Growth series of the structure group of the size-d reflection solution."""
    if d < 2:
        raise ValueError("d must be at least 2")
    if d % 2 == 1:
        num = Polynomial([2 * d]).shift(1) + ONE_MINUS_T * (ONE + Polynomial([d - 1]).shift(2))
        return RationalGF(num, ONE_MINUS_T)
    half = d // 2
    num = half * ONE_PLUS_T**2 + (half - 1) * (T**2 - ONE) * ONE_MINUS_T**2
    return RationalGF(num, ONE_MINUS_T**2)


# -- defect machinery ----------------------------------------------------------


@dataclass(frozen=True)
class DefectRecord:
    """Size data of one product of conjugacy-class powers."""

    exponents: tuple[int, ...]
    product_class_mask: int
    product_size: int
    defect: int


class _ClassData:
    """Pre-computed class data shared by the defect routines."""

    def __init__(self, group: FiniteGroupTable):
        self.group = group
        self.dec: ConjugacyDecomposition = group.conjugacy_classes()
        self.table = class_product_table(group, self.dec)
        self.sizes = self.dec.sizes
        self.gamma = len(group.commutator_subgroup())
        self.count = self.dec.count
        self.self_inverse = all(
            self.dec.inverse_class[i] == i for i in range(self.count)
        )

    def mask_times_class(self, mask: int, cls: int) -> int:
        out = 0
        row = self.table
        i = 0
        while mask:
            if mask & 1:
                out |= row[i][cls]
            mask >>= 1
            i += 1
        return out

    def mask_size(self, mask: int) -> int:
        total = 0
        i = 0
        while mask:
            if mask & 1:
                total += self.sizes[i]
            mask >>= 1
            i += 1
        return total

    def defect_of_mask(self, mask: int) -> int:
        defect = self.gamma - self.mask_size(mask)
        if defect < 0:
            raise AssertionError("class product exceeded the commutator subgroup size")
        return defect

    def chain(self, mask: int, cls: int, inverse: bool = False):
        """Masks mask * C^k for k = 0,1,2,... plus the 2-periodic stabilisation
        point: returns (prefix list m_0..m_{s+1}, s) with m_{k+2} = m_k for all
        k >= s.  Stabilisation is guaranteed: multiplying twice by a
        self-inverse class only grows the mask."""
        c = self.dec.inverse_class[cls] if inverse else cls
        masks = [mask]
        while True:
            masks.append(self.mask_times_class(masks[-1], c))
            n = len(masks)
            if n >= 4 and masks[-1] == masks[-3] and masks[-2] == masks[-4]:
                return masks[:-2], n - 4
            if n > 4 * self.count + 8:
                raise AssertionError("class power chain failed to stabilise")


def defect_measure(
    group: FiniteGroupTable,
    dec: ConjugacyDecomposition,
    table: Sequence[Sequence[int]],
    kbar: Sequence[int],
) -> DefectRecord:
    """delta_G(kbar) = |[G,G]| - |prod C_i^{k_i}|, via bitmask products.

    kbar has one entry per nontrivial class (classes 1..c-1 in decomposition
    order); negative exponents use the elementwise inverse class.
    """
    if len(kbar) != dec.count - 1:
        raise ValueError(f"expected {dec.count - 1} exponents, got {len(kbar)}")
    data = _ClassData.__new__(_ClassData)
    data.group = group
    data.dec = dec
    data.table = table
    data.sizes = dec.sizes
    data.gamma = len(group.commutator_subgroup())
    data.count = dec.count
    mask = 1  # the identity class
    for i, k in enumerate(kbar):
        cls = i + 1
        if k < 0:
            cls = dec.inverse_class[cls]
            k = -k
        for _ in range(k):
            mask = data.mask_times_class(mask, cls)
    size = data.mask_size(mask)
    return DefectRecord(tuple(int(k) for k in kbar), mask, size, data.gamma - size)


@dataclass(frozen=True)
class AxisRay:
    """A line of eventually constant defect along one class axis (others 0)."""

    class_index: int
    start: int
    even_defect: int
    odd_defect: int


@dataclass
class DefectSeriesResult:
    truncated: TruncatedSeries
    closed_form: Optional[RationalGF]
    classification: str  # finite | finite-plus-axis-rays | truncated-only
    polynomial_part: Optional[Polynomial] = None
    tail_numerator: Optional[Polynomial] = None  # over 1 - t^2
    axis_rays: tuple[AxisRay, ...] = ()
    diagnostic: Optional[str] = None


def defect_series(
    group: FiniteGroupTable, order: int, state_budget: int = DEFAULT_DEFECT_BUDGET
) -> DefectSeriesResult:
    """Defect series Delta_G(t) = sum over kbar of delta(kbar) t^{|kbar|}.

    When every class is self-inverse the series is computed exactly as a
    rational function by a memoised suffix recursion over the classes (each
    class-power chain of bitmasks is 2-periodic past a provable stabilisation
    point).  The closed form is emitted when the support is finite or finite
    plus axis-parallel rays; richer support falls back to truncated-only.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    data = _ClassData(group)
    if not data.self_inverse:
        truncated = _defect_truncated_signed(data, order, state_budget)
        return DefectSeriesResult(
            truncated,
            None,
            "truncated-only",
            diagnostic="classes are not all self-inverse; no closed-form extraction",
        )

    ops = [0]

    def spend(n: int) -> None:
        ops[0] += n
        if ops[0] > state_budget:
            raise BudgetExceededError("defect closed-form extraction exceeded state budget")

    # values are pairs (num, e) standing for num / (1 - t^2)^e, kept normalised
    # so denominators never compound during the recursion
    memo: dict[tuple[int, int], tuple[Polynomial, int]] = {}

    def gadd(a: tuple[Polynomial, int], b: tuple[Polynomial, int]) -> tuple[Polynomial, int]:
        (na, ea), (nb, eb) = a, b
        e = max(ea, eb)
        return na * ONE_MINUS_T2 ** (e - ea) + nb * ONE_MINUS_T2 ** (e - eb), e

    def suffix(i: int, mask: int) -> tuple[Polynomial, int]:
        if i == data.count:
            return Polynomial([data.defect_of_mask(mask)]), 0
        key = (i, mask)
        hit = memo.get(key)
        if hit is not None:
            return hit
        prefix, s = data.chain(mask, i)
        spend(len(prefix))
        total = suffix(i + 1, prefix[0])  # k = 0, weight 1
        for k in range(1, len(prefix)):
            num, e = suffix(i + 1, prefix[k])
            total = gadd(total, ((2 * num).shift(k), e))
        # tail: masks alternate between prefix[s] and prefix[s+1] from k = s+2 on
        for offset, tail_mask in ((s + 2, prefix[s]), (s + 3, prefix[s + 1])):
            num, e = suffix(i + 1, tail_mask)
            total = gadd(total, ((2 * num).shift(offset), e + 1))
        memo[key] = total
        return total

    try:
        num, den_power = suffix(1, 1)
    except BudgetExceededError as exc:
        truncated = _defect_truncated_signed(data, order, state_budget * 10)
        return DefectSeriesResult(
            truncated, None, "truncated-only", diagnostic=str(exc)
        )

    while den_power > 0:
        q, r = num.divmod(ONE_MINUS_T2)
        if not r.is_zero():
            break
        num = q
        den_power -= 1

    truncated = expand_rational(RationalGF(num, ONE_MINUS_T2**den_power), order)
    check = _defect_truncated_signed(data, order, state_budget * 10)
    if truncated != check:
        raise AssertionError("closed-form defect series disagrees with direct enumeration")

    rays = _axis_rays(data)
    if den_power == 0:
        return DefectSeriesResult(
            truncated,
            RationalGF(num, ONE),
            "finite",
            polynomial_part=num,
            axis_rays=rays,
        )
    if den_power == 1:
        poly_part, tail = num.divmod(ONE_MINUS_T2)
        return DefectSeriesResult(
            truncated,
            RationalGF(num, ONE_MINUS_T2),
            "finite-plus-axis-rays",
            polynomial_part=poly_part,
            tail_numerator=tail,
            axis_rays=rays,
        )
    return DefectSeriesResult(
        truncated,
        None,
        "truncated-only",
        axis_rays=rays,
        diagnostic="defect support is richer than axis-parallel rays",
    )


def _axis_rays(data: _ClassData) -> tuple[AxisRay, ...]:
    """Per-class pure power chains C_i^k: the eventually constant defects along
    each axis through the origin."""
    rays = []
    for cls in range(1, data.count):
        prefix, s = data.chain(1, cls)
        even = data.defect_of_mask(prefix[s] if s % 2 == 0 else prefix[s + 1])
        odd = data.defect_of_mask(prefix[s + 1] if s % 2 == 0 else prefix[s])
        if even or odd:
            rays.append(AxisRay(cls, s, even, odd))
    return tuple(rays)


def _defect_truncated_signed(
    data: _ClassData, order: int, state_budget: int
) -> TruncatedSeries:
    """Direct truncated enumeration over signed exponent tuples, memoised by
    (class position, reachable mask).  Valid with or without self-inverse
    classes; used both as the general fallback and as the closed-form check."""
    ops = [0]
    memo: dict[tuple[int, int], list[int]] = {}

    def suffix(i: int, mask: int) -> list[int]:
        if i == data.count:
            out = [0] * (order + 1)
            out[0] = data.defect_of_mask(mask)
            return out
        key = (i, mask)
        hit = memo.get(key)
        if hit is not None:
            return hit
        ops[0] += 1
        if ops[0] > state_budget:
            raise BudgetExceededError("defect enumeration exceeded state budget")
        total = list(suffix(i + 1, mask))
        for inverse in (False, True):
            m = mask
            cls = data.dec.inverse_class[i] if inverse else i
            for k in range(1, order + 1):
                m = data.mask_times_class(m, cls)
                sub = suffix(i + 1, m)
                for j in range(k, order + 1):
                    total[j] += sub[j - k]
        memo[key] = total
        return total

    coeffs = suffix(1, 1)
    return TruncatedSeries(Fraction(c) for c in coeffs)


def is_commutator_length_one(group: FiniteGroupTable) -> bool:
    """Whether every element of [G,G] is a single commutator (exhaustive)."""
    return set(group.commutator_subgroup()) == group.commutator_set()


@dataclass
class ConjugationGrowthResult:
    """Growth data of the structure group of the full conjugation solution."""

    truncated: TruncatedSeries
    closed_form: Optional[RationalGF]
    defect: DefectSeriesResult
    commutator_size: int
    class_count: int


def as_full_conjugation_gf(
    group: FiniteGroupTable, order: int, state_budget: int = DEFAULT_DEFECT_BUDGET
) -> ConjugationGrowthResult:
    """Growth series of As(G) for the conjugation solution on all of G:
    |[G,G]| ((1+t)/(1-t))^c - (1+t)^2 Delta_G(t).

    Requires commutator length 1, asserted exhaustively over [G,G].
    """
    if not is_commutator_length_one(group):
        raise ValueError(
            f"group {group.name} has an element of [G,G] that is not a single "
            "commutator; the defect formula does not apply"
        )
    defect = defect_series(group, order, state_budget)
    c = group.conjugacy_classes().count
    gamma = len(group.commutator_subgroup())
    free_part = expand_rational(RationalGF(ONE_PLUS_T**c, ONE_MINUS_T**c), order)
    square = expand_rational(RationalGF(ONE_PLUS_T**2), order)
    truncated = gamma * free_part - square * defect.truncated
    closed = None
    if defect.closed_form is not None:
        closed = (
            RationalGF(Polynomial([gamma]) * ONE_PLUS_T**c, ONE_MINUS_T**c)
            - RationalGF(ONE_PLUS_T**2) * defect.closed_form
        )
    return ConjugationGrowthResult(truncated, closed, defect, gamma, c)
