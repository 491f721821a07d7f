"""Integer and modular arithmetic used by the classification.

Everything here is exact integer arithmetic on desk-scale inputs: trial
division for factoring, and square roots of +1 / -1 modulo n built one
prime power at a time and glued together with the Chinese remainder
theorem.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

__all__ = [
    "Factorization",
    "ResidueSet",
    "RootCount",
    "gcd",
    "is_prime",
    "factorize",
    "crt",
    "unit_square_roots",
    "root_count",
    "minus_one_solvable",
    "two_adic_split",
]


def gcd(a: int, b: int) -> int:
    """Nonnegative greatest common divisor; ``gcd(0, 0) == 0``."""
    return math.gcd(a, b)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 1
        for p, e in self.factors:
            if e < 1 or p <= last or not is_prime(p):
                raise ValueError(f"invalid factor {p}^{e} in factorization of {self.n}")
            prod *= p**e
            last = p
        if prod != self.n:
            raise ValueError(f"factors multiply to {prod}, not {self.n}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def odd_primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors if p != 2)

    @property
    def two_exponent(self) -> int:
        """Exponent a in n = 2^a q with q odd."""
        for p, e in self.factors:
            if p == 2:
                return e
        return 0

    def prime_powers(self) -> list[int]:
        return [p**e for p, e in self.factors]


def factorize(n: int) -> Factorization:
    """Factor ``n >= 1`` by trial division up to sqrt(n)."""
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    factors = []
    rest = n
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            e = 0
            while rest % d == 0:
                rest //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if rest > 1:
        factors.append((rest, 1))
    return Factorization(n, tuple(factors))


def two_adic_split(n: int) -> tuple[int, int]:
    """Return (a, q) with n = 2^a * q and q odd."""
    if n < 1:
        raise ValueError(f"two_adic_split needs n >= 1, got {n}")
    a = (n & -n).bit_length() - 1
    return a, n >> a


def crt(residues: list[int], moduli: list[int]) -> int:
    """Combine x = r_i (mod m_i) for pairwise coprime moduli."""
    x, m = 0, 1
    for r, k in zip(residues, moduli):
        # x + m*t = r (mod k)
        t = ((r - x) * pow(m, -1, k)) % k if k > 1 else 0
        x += m * t
        m *= k
    return x % m


@dataclass(frozen=True)
class ResidueSet:
    """All alpha in Z_modulus with alpha^2 = sign."""

    modulus: int
    sign: int
    elements: tuple[int, ...]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x % self.modulus in self.elements


@dataclass(frozen=True)
class RootCount:
    modulus: int
    r: int
    u: int
    count: int


def _sqrt_minus_one_mod_prime(p: int) -> int:
    # p = 1 mod 4: c^((p-1)/4) for any quadratic non-residue c
    for c in range(2, p):
        if pow(c, (p - 1) // 2, p) == p - 1:
            return pow(c, (p - 1) // 4, p)
    raise ArithmeticError(f"no non-residue found mod {p}")


def _roots_odd_prime_power(p: int, e: int, sign: int) -> list[int]:
    q = p**e
    if sign == 1:
        return [1, q - 1]
    if p % 4 != 1:
        return []
    x = _sqrt_minus_one_mod_prime(p)
    mod = p
    for _ in range(1, e):
        mod *= p
        x = (x - (x * x + 1) * pow(2 * x, -1, mod)) % mod
    return sorted({x, q - x})


def _roots_two_power(e: int, sign: int) -> list[int]:
    q = 2**e
    if e == 1:
        return [1]
    if sign == -1:
        return []
    if e == 2:
        return [1, 3]
    h = q // 2
    return [1, h - 1, h + 1, q - 1]


def unit_square_roots(n: int, sign: int = 1) -> ResidueSet:
    """Sorted solutions of alpha^2 = sign (mod n), sign in {+1, -1}.

    Z_1 is represented by the single residue 0, which counts as a root of
    both congruences.
    """
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if n == 1:
        return ResidueSet(1, sign, (0,))
    per_power = []
    moduli = []
    for p, e in factorize(n).factors:
        roots = _roots_two_power(e, sign) if p == 2 else _roots_odd_prime_power(p, e, sign)
        if not roots:
            return ResidueSet(n, sign, ())
        per_power.append(roots)
        moduli.append(p**e)
    elements = sorted(crt(list(combo), moduli) for combo in product(*per_power))
    return ResidueSet(n, sign, tuple(elements))


def root_count(n: int) -> RootCount:
    """Number of solutions of alpha^2 = 1 (mod n), as 2^(r+u)."""
    f = factorize(n)
    r = len(f.odd_primes)
    a = f.two_exponent
    u = 0 if a < 2 else (1 if a == 2 else 2)
    return RootCount(n, r, u, 2 ** (r + u))


def minus_one_solvable(n: int) -> bool:
    """True iff n = 2^eps * prod p_i^k_i with eps in {0, 1} and every p_i = 1 mod 4."""
    f = factorize(n)
    if f.two_exponent > 1:
        return False
    return all(p % 4 == 1 for p in f.odd_primes)
