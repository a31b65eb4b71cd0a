"""Structure monoids of reflection solutions: the numeric invariants (weight,
density, anchor, essential even/odd lengths), essentialisation, canonical
normal forms, the embedding of full parts into semidirect products, and the
growth series, over both the integers and Z_d.

Conventions.  Words over the integers ("infinite modulus") keep signed
weights; over Z_d the weight and all letters are least non-negative residues
and the density of a single letter is d rather than 0.  For a finite word
whose essential level d/density is odd, letter parity is not well defined, so
the essential even length is fixed to the whole length by convention; the
invariant tuple remains complete because at odd level the weight and length
already separate elements.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .series import ONE, Polynomial, RationalGF, T

ONE_MINUS_T = ONE - T


def _gcd_all(*values: int) -> int:
    g = 0
    for v in values:
        g = math.gcd(g, abs(v))
    return g


@dataclass(frozen=True)
class ReflectionWord:
    """Word in the letters e_a over the integers (modulus None) or Z_d."""

    letters: tuple[int, ...]
    modulus: Optional[int] = None

    def __post_init__(self):
        letters = tuple(int(a) for a in self.letters)
        if self.modulus is not None:
            if self.modulus < 1:
                raise ValueError("modulus must be at least 1")
            if any(not 0 <= a < self.modulus for a in letters):
                raise ValueError("letters out of range for the modulus")
        object.__setattr__(self, "letters", letters)

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "ReflectionWord") -> "ReflectionWord":
        if self.modulus != other.modulus:
            raise ValueError("words over different moduli")
        return ReflectionWord(self.letters + other.letters, self.modulus)

    def apply_move(self, pos: int, inverse: bool = False) -> "ReflectionWord":
        """One braiding move at pos: (x, y) -> (2x-y, x), or its inverse."""
        x, y = self.letters[pos], self.letters[pos + 1]
        pair = (y, 2 * y - x) if inverse else (2 * x - y, x)
        if self.modulus is not None:
            pair = (pair[0] % self.modulus, pair[1] % self.modulus)
        return ReflectionWord(self.letters[:pos] + pair + self.letters[pos + 2 :], self.modulus)

    def __str__(self):
        return ",".join(str(a) for a in self.letters)


@dataclass(frozen=True)
class InvariantTuple:
    """The complete invariant of a reflection-monoid element."""

    modulus: Optional[int]
    weight: int
    density: int
    anchor: int
    essential_even: int
    essential_odd: int
    length: int

    @property
    def level(self) -> Optional[int]:
        """Essential level d / density (None over the integers)."""
        if self.modulus is None:
            return None
        return self.modulus // self.density

    def essential_weight(self) -> int:
        """Weight of the essentialisation (mod the level when finite)."""
        adjust = self.anchor if self.length % 2 == 1 else 0
        if self.modulus is None:
            if self.density == 0:
                raise ValueError("frozen words have no essentialisation")
            return (self.weight - adjust) // self.density
        return ((self.weight - adjust) % self.modulus) // self.density % self.level


def invariants(word: ReflectionWord) -> InvariantTuple:
    """All five invariants of a word; constant on braiding orbits."""
    letters = word.letters
    n = len(letters)
    d = word.modulus
    if n == 0:
        return InvariantTuple(d, 0, 0 if d is None else d, 0, 0, 0, 0)
    weight = sum(a if i % 2 == 0 else -a for i, a in enumerate(letters))
    diffs = [letters[i] - letters[i + 1] for i in range(n - 1)]
    if d is None:
        density = _gcd_all(*diffs) if n >= 2 else 0
        anchor = letters[0] % density if density > 0 else letters[0]
    else:
        weight %= d
        density = _gcd_all(d, *diffs)
        anchor = letters[0] % density
    even, odd = _essential_lengths(letters, n, d, density, anchor)
    return InvariantTuple(d, weight, density, anchor, even, odd, n)


def _essential_lengths(letters, n, d, density, anchor) -> tuple[int, int]:
    if d is None:
        if density == 0:
            return (n, 0) if letters[0] % 2 == 0 else (0, n)
        ess = [(a - anchor) // density for a in letters]
    else:
        level = d // density
        if level % 2 == 1:
            # parity collapses at odd level; fixed by convention
            return n, 0
        ess = [((a - anchor) % d) // density for a in letters]
    even = sum(1 for a in ess if a % 2 == 0)
    return even, n - even


def essentialise(word: ReflectionWord) -> ReflectionWord:
    """Divide out the density through the affine letter map x -> (x-anchor)/density."""
    inv = invariants(word)
    if word.modulus is None:
        if inv.density == 0:
            raise ValueError("frozen words over the integers have no essentialisation")
        return ReflectionWord(
            tuple((a - inv.anchor) // inv.density for a in word.letters), None
        )
    return ReflectionWord(
        tuple(((a - inv.anchor) % word.modulus) // inv.density for a in word.letters),
        word.modulus // inv.density,
    )


def push_through(word: ReflectionWord, a: int) -> int:
    """The letter b with word * e_a = e_b * word: (-1)^len * a + 2 * weight."""
    inv = invariants(word)
    b = (-1) ** inv.length * a + 2 * inv.weight
    if word.modulus is not None:
        b %= word.modulus
    return b


@dataclass(frozen=True)
class NormalForm:
    """Canonical representative of a reflection-monoid element.

    Shapes: empty; frozen-power e_a^n; length2 e_a e_b; length3 e_x^2 e_y;
    standard e_0^k e_1^l e_c rescaled by (density, anchor).
    """

    shape: str
    word: ReflectionWord
    density: int
    anchor: int
    params: tuple

    def __str__(self):
        return str(self.word)


def normal_form(word: ReflectionWord) -> NormalForm:
    inv = invariants(word)
    d = word.modulus
    n = inv.length
    nf = _normal_form_impl(word, inv)
    if invariants(nf.word) != inv:
        raise AssertionError(f"normal form of {word} does not preserve invariants")
    if len(nf.word) != n:
        raise AssertionError("normal form changed the length")
    return nf


def _normal_form_impl(word: ReflectionWord, inv: InvariantTuple) -> NormalForm:
    d = word.modulus
    n = inv.length
    if n == 0:
        return NormalForm("empty", word, inv.density, 0, ())
    frozen = inv.density == 0 if d is None else inv.density == d
    if frozen:
        a = word.letters[0]
        return NormalForm(
            "frozen-power", ReflectionWord((a,) * n, d), inv.density, inv.anchor, (a, n)
        )
    if n == 2:
        first = inv.anchor
        second = first - inv.weight if d is None else (first - inv.weight) % d
        return NormalForm(
            "length2", ReflectionWord((first, second), d), inv.density, inv.anchor, (first, second)
        )
    if n == 3:
        x = inv.weight + inv.density if d is None else (inv.weight + inv.density) % d
        y = inv.weight
        return NormalForm(
            "length3", ReflectionWord((x, x, y), d), inv.density, inv.anchor, (x, y)
        )
    k, p, c = _standard_parameters(inv)
    deg, anchor = inv.density, inv.anchor
    if d is None:
        letters = (anchor,) * k + (deg + anchor,) * p + (deg * c + anchor,)
    else:
        letters = ((anchor,) * k + ((deg + anchor) % d,) * p + ((deg * c + anchor) % d,))
    return NormalForm("standard", ReflectionWord(letters, d), deg, anchor, (k, p, c))


def _standard_parameters(inv: InvariantTuple) -> tuple[int, int, int]:
    """Exponents (k, l, c) of the essential word e_0^k e_1^l e_c.

    At even level (and over the integers) an element with both essential
    lengths at least 2 has exactly two presentations, one per parity of the
    final letter; the canonical choice is the even one.  At odd level the
    presentation with l = 1 is the unique canonical one.
    """
    level = inv.level  # None over the integers
    omega = inv.essential_weight()
    n = inv.length
    if level is not None and level % 2 == 1:
        k, p = n - 2, 1
        c = _solve_final_letter(omega, k, p)
        return k, p, c % level
    l0, l1 = inv.essential_even, inv.essential_odd
    if l0 < 1 or l1 < 1:
        raise AssertionError("full word at even level missing a parity class")
    if l1 == 1 or (l0 >= 2 and l1 >= 2):
        k, p = l0 - 1, l1  # final letter even
        want_parity = 0
    else:  # l0 == 1: final letter odd is the only option
        k, p = l0, l1 - 1
        want_parity = 1
    c = _solve_final_letter(omega, k, p)
    if level is not None:
        c %= level
    if c % 2 != want_parity:
        raise AssertionError("final-letter parity disagrees with the chosen presentation")
    return k, p, c


def _solve_final_letter(omega: int, k: int, p: int) -> int:
    """c with weight(e_0^k e_1^p e_c) = omega: the alternating sum gives
    omega = [p odd](-1)^k + (-1)^{k+p} c."""
    base = (-1) ** k if p % 2 == 1 else 0
    return (-1) ** (k + p) * (omega - base)


def elements_equal(w1: ReflectionWord, w2: ReflectionWord) -> bool:
    """Monoid-element equality, decided by the complete invariant tuple."""
    if w1.modulus != w2.modulus:
        raise ValueError("cannot compare words over different moduli")
    return invariants(w1) == invariants(w2)


def density_of_product(t1: InvariantTuple, t2: InvariantTuple) -> int:
    """Density of a product from the factors' densities and anchors."""
    if t1.modulus != t2.modulus:
        raise ValueError("tuples from different moduli")
    return _gcd_all(t1.density, t2.density, t1.anchor - t2.anchor)


# -- constructive arithmetic lemmas --------------------------------------------


def _prime_factors(n: int) -> list[int]:
    n = abs(n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _crt(congruences: list[tuple[int, int]]) -> tuple[int, int]:
    """Solve x = r (mod m) for pairwise coprime moduli; returns (x, lcm)."""
    x, m = 0, 1
    for r, mod in congruences:
        g, inv_m, _ = _egcd(m % mod, mod)
        if g != 1:
            raise ValueError("moduli not coprime")
        x += m * ((r - x) * inv_m % mod)
        m *= mod
    return x % m, m


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return (a, 1, 0) if a >= 0 else (-a, -1, 0)
    g, x, y = _egcd(b, a % b)
    return g, y, x - (a // b) * y


def triple_gcd_witness(a: int, b: int, c: int, parity: Optional[int] = None) -> int:
    """n >= 1 with gcd(a + n c, b + n c) = gcd(a, b, c), of the requested
    parity when asked (which needs a, b of different parity).

    Built by the Chinese remainder theorem over the prime divisors of b - a,
    with a verified bounded search as fallback.
    """
    if a == b:
        raise ValueError("requires a != b")
    if parity is not None:
        if parity not in (0, 1):
            raise ValueError("parity must be 0 or 1")
        if (a - b) % 2 == 0:
            raise ValueError("parity constraint needs a, b of different parity")
    g = _gcd_all(a, b, c)
    ar, br, cr = a // g, b // g, c // g
    congruences = []
    for p in _prime_factors(br - ar):
        congruences.append((0 if ar % p else 1, p))
    if parity is not None:
        congruences.append((parity, 2))
    try:
        n, mod = _crt(congruences) if congruences else (1, 1)
        if n < 1:
            n += mod
        if n < 1:
            n = mod
        if _gcd_all(a + n * c, b + n * c) == g and (parity is None or n % 2 == parity):
            return n
    except ValueError:
        pass
    step = 1 if parity is None else 2
    start = 1 if parity is None or parity == 1 else 2
    bound = 4 * abs(b - a) * max(abs(c), 1) + 16
    for n in range(start, bound, step):
        if _gcd_all(a + n * c, b + n * c) == g:
            return n
    raise ArithmeticError(f"no witness found for ({a}, {b}, {c}, parity={parity})")


def _pair_lift(x: int, a: int, d: int) -> int:
    """m with gcd(x, a + m d) = gcd(d, x, a); needs x != 0."""
    if x == 0:
        raise ValueError("anchor must be nonzero")
    g = _gcd_all(d, x, a)
    xr, ar, dr = x // g, a // g, d // g
    congruences = []
    for p in _prime_factors(xr):
        if dr % p == 0:
            continue  # p cannot divide a_r, any m works mod p
        inv = pow(dr % p, -1, p)
        congruences.append(((1 - ar) * inv % p, p))
    m = _crt(congruences)[0] if congruences else 0
    if _gcd_all(x, a + m * d) != g:
        raise AssertionError("pairwise lift failed verification")
    return m


def lift_to_coprime(values: Sequence[int], d: int, force_odd: bool = False) -> list[int]:
    """Offsets m with gcd_i(values_i + m_i d) = gcd(d, values...); with
    force_odd (d odd) every lifted value is odd."""
    values = [int(v) for v in values]
    if len(values) < 2:
        raise ValueError("need at least two values")
    if force_odd and d % 2 == 0:
        raise ValueError("force_odd requires odd d")
    target = _gcd_all(d, *values)
    if d == 0:
        return [0] * len(values)
    if force_odd:
        base = [0 if v % 2 == 1 else 1 for v in values]
        step = 2 * d
    else:
        base = [0] * len(values)
        step = d
    lifted = [v + b * d for v, b in zip(values, base)]
    if all(v == 0 for v in lifted):
        result = [b + 1 for b in base]  # all values become d (odd when forced)
    else:
        anchor = next(i for i, v in enumerate(lifted) if v != 0)
        result = list(base)
        for i, v in enumerate(lifted):
            if i == anchor:
                continue
            m = _pair_lift(lifted[anchor], v, step)
            result[i] = base[i] + m * (step // d)
    final = [v + m * d for v, m in zip(values, result)]
    if _gcd_all(*final) != target:
        raise AssertionError("coprime lift failed verification")
    if force_odd and any(v % 2 == 0 for v in final):
        raise AssertionError("coprime lift failed the parity requirement")
    return result


# -- the full reflection semigroups and growth ---------------------------------


def frs_embed(word: ReflectionWord):
    """Image of a full finite word under the structure embedding: (weight,
    even length, odd length) for even d, (weight, length) for odd d > 1, and
    (length,) for d = 1."""
    d = word.modulus
    if d is None:
        raise ValueError("finite modulus required")
    inv = invariants(word)
    if inv.density != 1:
        raise ValueError(f"word of density {inv.density} is not full")
    if d == 1:
        return (inv.length,)
    if d % 2 == 0:
        even = sum(1 for a in word.letters if a % 2 == 0)
        return (inv.weight, even, inv.length - even)
    return (inv.weight, inv.length)


def frs_image_contains(d: int, image: tuple) -> bool:
    """Membership predicate for the stated images of the full-part embeddings."""
    if d == 1:
        (l,) = image
        return l >= 1
    if d % 2 == 0:
        m, k, l = image
        if not (0 <= m < d and k >= 1 and l >= 1):
            return False
        if (l - m) % 2 != 0:
            return False
        if k + l > 2:
            return True
        return math.gcd(m, d) == 1
    m, l = image
    if not 0 <= m < d:
        return False
    if l >= 3:
        return True
    return l == 2 and math.gcd(m, d) == 1


def euler_phi(n: int) -> int:
    result = n
    for p in _prime_factors(n):
        result -= result // p
    return result


def divisor_count(x) -> int:
    """Number of divisors, with tau(x) = 0 for non-integers."""
    if isinstance(x, Fraction):
        if x.denominator != 1:
            return 0
        x = x.numerator
    if x != int(x):
        return 0
    x = int(x)
    if x < 1:
        return 0
    count = 1
    n = x
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            count *= e + 1
        p += 1 if p == 2 else 2
    if n > 1:
        count *= 2
    return count


def divisors(n: int) -> list[int]:
    return [c for c in range(1, n + 1) if n % c == 0]


def frs_growth_gf(d: int) -> RationalGF:
    """Restricted growth series of the level-d full reflection semigroup."""
    if d < 1:
        raise ValueError("d must be at least 1")
    if d == 1:
        return RationalGF(T, ONE_MINUS_T)
    phi = euler_phi(d)
    if d % 2 == 1:
        num = Polynomial([phi]).shift(2) * ONE_MINUS_T + Polynomial([d]).shift(3)
        return RationalGF(num, ONE_MINUS_T)
    num = Polynomial([phi]).shift(2) * ONE_MINUS_T**2 + Fraction(d, 2) * (
        Polynomial([2, -1]).shift(3)
    )
    return RationalGF(num, ONE_MINUS_T**2)


def monoid_growth_reflections(d: int) -> RationalGF:
    """Growth series of the structure monoid of the size-d reflection solution.

    Assembled from the divisor formula (totient convolution at t^2, divisor
    counts at the geometric tails) and checked against the level decomposition
    sum over divisors; the two must agree as rational functions.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    s2 = sum(Fraction(euler_phi(c), c) for c in divisors(d))
    tau_d = divisor_count(d)
    tau_half = divisor_count(Fraction(d, 2))
    head = ONE + Polynomial([d]).shift(1) + Polynomial([d * s2]).shift(2)
    num = (
        head * ONE_MINUS_T**2
        + Polynomial([d * tau_d]).shift(3) * ONE_MINUS_T
        + Polynomial([Fraction(d * tau_half, 2)]).shift(4)
    )
    formula = RationalGF(num, ONE_MINUS_T**2)
    via_levels = RationalGF(ONE)
    for c in divisors(d):
        via_levels = via_levels + RationalGF(Polynomial([d // c])) * frs_growth_gf(c)
    if formula != via_levels:
        raise AssertionError(f"the two reflection-monoid growth routes disagree at d={d}")
    return formula
