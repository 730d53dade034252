"""Exact modular arithmetic over odd prime moduli.

Primality testing, twin-prime enumeration, residue-class arithmetic,
Legendre/Jacobi symbols, Tonelli-Shanks square roots, and quadratic
congruence solving.  Everything is deterministic and exact; no floats.
"""

from __future__ import annotations

from dataclasses import dataclass


class ZeroNotInvertible(ZeroDivisionError):
    """Raised when asking for the inverse of 0 mod p."""


class LeadingCoefficientNotInvertible(ValueError):
    """Raised when a quadratic congruence has p | c2."""


# Strong-pseudoprime bases that make Miller-Rabin deterministic for all
# n < 3_317_044_064_679_887_385_961_981 (covers the full 63-bit range).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_prime(n: int) -> bool:
    """Deterministic primality test, exact for all n <= 2**63."""
    if n < 0:
        raise ValueError(f"primality is defined for nonnegative integers, got {n}")
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n == q:
            return True
        if n % q == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_upto(bound: int) -> list[int]:
    """All primes <= bound, by sieve."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(bound**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, flag in enumerate(sieve) if flag]


def twin_primes_upto(bound: int) -> list[tuple[int, int]]:
    """Twin prime pairs (p-2, p) with 5 <= p <= bound, ascending in p."""
    prime = set(primes_upto(bound))
    return [(p - 2, p) for p in sorted(prime) if p >= 5 and p - 2 in prime]


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, x, y) with a*x + b*y = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def _invmod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroNotInvertible(f"0 is not invertible mod {p}")
    g, x, _ = _egcd(a, p)
    if g != 1:
        raise ZeroNotInvertible(f"{a} is not invertible mod {p}")
    return x % p


@dataclass(frozen=True)
class PrimeModulus:
    """An odd prime modulus p >= 3 (validated on construction)."""

    p: int

    def __post_init__(self) -> None:
        if self.p < 3 or self.p % 2 == 0 or self.p.bit_length() > 63:
            raise ValueError(f"modulus must be an odd prime in [3, 2^63), got {self.p}")
        if not is_prime(self.p):
            raise ValueError(f"modulus must be prime, got {self.p}")

    def residue(self, value: int) -> "ResidueClass":
        return ResidueClass(value, self)

    def __int__(self) -> int:
        return self.p

    def __str__(self) -> str:
        return str(self.p)


def _pval(p: "PrimeModulus | int") -> int:
    """Accept a PrimeModulus or a plain odd prime int; return the int."""
    if isinstance(p, PrimeModulus):
        return p.p
    PrimeModulus(p)  # validate
    return p


@dataclass(frozen=True)
class ResidueClass:
    """An integer residue in [0, p) paired with its prime modulus.

    Arithmetic operators accept another ResidueClass with the same modulus
    or a plain int (reduced automatically).  Mixing moduli raises ValueError.
    """

    value: int
    modulus: PrimeModulus

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.value % self.modulus.p)

    @property
    def p(self) -> int:
        return self.modulus.p

    def _coerce(self, other: "ResidueClass | int") -> int:
        if isinstance(other, ResidueClass):
            if other.modulus != self.modulus:
                raise ValueError(
                    f"mixed moduli: {self.p} vs {other.p}"
                )
            return other.value
        if isinstance(other, int):
            return other % self.p
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: "ResidueClass | int") -> "ResidueClass":
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return ResidueClass(self.value + v, self.modulus)

    __radd__ = __add__

    def __sub__(self, other: "ResidueClass | int") -> "ResidueClass":
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return ResidueClass(self.value - v, self.modulus)

    def __rsub__(self, other: int) -> "ResidueClass":
        return ResidueClass(other - self.value, self.modulus)

    def __mul__(self, other: "ResidueClass | int") -> "ResidueClass":
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return ResidueClass(self.value * v, self.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> "ResidueClass":
        return ResidueClass(-self.value, self.modulus)

    def __pow__(self, exp: int) -> "ResidueClass":
        return mod_pow(self, exp)

    def inverse(self) -> "ResidueClass":
        return ResidueClass(_invmod(self.value, self.p), self.modulus)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ResidueClass):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.p))

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return f"{self.value} (mod {self.p})"


def mod_pow(base: ResidueClass, exp: int) -> ResidueClass:
    """base**exp reduced mod p; exp must be nonnegative (exp 0 gives 1)."""
    if exp < 0:
        raise ValueError("exponent must be nonnegative; use inverse() for negatives")
    return ResidueClass(pow(base.value, exp, base.p), base.modulus)


def mod_inverse(x: "ResidueClass | int", p: "PrimeModulus | int | None" = None):
    """Multiplicative inverse mod p via extended gcd.

    Either mod_inverse(residue) -> ResidueClass, or mod_inverse(x, p) -> int.
    Raises ZeroNotInvertible when x is 0 mod p.
    """
    if isinstance(x, ResidueClass):
        return x.inverse()
    if p is None:
        raise TypeError("mod_inverse(int) requires the modulus as second argument")
    return _invmod(x, _pval(p))


def legendre(a: int, p: "PrimeModulus | int") -> int:
    """Legendre symbol (a/p) in {-1, 0, +1}; a is reduced mod p first."""
    pv = _pval(p)
    a %= pv
    if a == 0:
        return 0
    r = pow(a, (pv - 1) // 2, pv)
    return 1 if r == 1 else -1


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 3; 0 when gcd(a, n) > 1."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol needs an odd n >= 3, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def sqrt_mod(a: ResidueClass) -> tuple[ResidueClass, ResidueClass] | None:
    """Square roots of a mod p, or None when a is a non-residue.

    Returns the unordered pair {r, p-r} with r <= p-r; a == 0 gives (0, 0).
    Tonelli-Shanks, with the p = 3 (mod 4) shortcut.
    """
    p = a.p
    if a.value == 0:
        zero = ResidueClass(0, a.modulus)
        return (zero, zero)
    if legendre(a.value, a.modulus) == -1:
        return None
    if p % 4 == 3:
        r = pow(a.value, (p + 1) // 4, p)
    else:
        r = _tonelli_shanks(a.value, p)
    r = min(r, p - r)
    return (ResidueClass(r, a.modulus), ResidueClass(p - r, a.modulus))


def _tonelli_shanks(n: int, p: int) -> int:
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, PrimeModulus(p)) != -1:
        z += 1
    c = pow(z, q, p)
    r = pow(n, (q + 1) // 2, p)
    t = pow(n, q, p)
    m = s
    while t != 1:
        i = 0
        t2 = t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        r = r * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return r


@dataclass(frozen=True)
class QuadCongruence:
    """The congruence c2*x^2 + c1*x + c0 = 0 (mod p)."""

    c2: int
    c1: int
    c0: int
    modulus: PrimeModulus

    @property
    def discriminant(self) -> int:
        """Full integer discriminant c1^2 - 4*c2*c0."""
        return self.c1 * self.c1 - 4 * self.c2 * self.c0

    @property
    def discriminant_mod(self) -> int:
        return self.discriminant % self.modulus.p

    def evaluate(self, x: int) -> int:
        p = self.modulus.p
        return (self.c2 * x * x + self.c1 * x + self.c0) % p


@dataclass(frozen=True)
class QuadSolution:
    """Root set of a quadratic congruence plus its solvability verdict."""

    roots: tuple[int, ...]
    discriminant_symbol: int  # legendre(disc, p)

    @property
    def solvable(self) -> bool:
        return self.discriminant_symbol >= 0


def solve_quadratic(q: QuadCongruence) -> QuadSolution:
    """Complete root set of c2*x^2 + c1*x + c0 = 0 (mod p).

    Solves by completing the square, (2*c2*x + c1)^2 = disc (mod p):
    two roots when the discriminant is a nonzero residue, one double root
    when it is 0, none when it is a non-residue.
    Raises LeadingCoefficientNotInvertible when p | c2.
    """
    p = q.modulus.p
    if q.c2 % p == 0:
        raise LeadingCoefficientNotInvertible(
            f"leading coefficient {q.c2} is 0 mod {p}; not a quadratic congruence"
        )
    symbol = legendre(q.discriminant, q.modulus)
    if symbol == -1:
        return QuadSolution((), -1)
    pair = sqrt_mod(ResidueClass(q.discriminant, q.modulus))
    assert pair is not None
    inv = _invmod(2 * q.c2, p)
    roots = sorted({(y.value - q.c1) * inv % p for y in pair})
    return QuadSolution(tuple(roots), symbol)
