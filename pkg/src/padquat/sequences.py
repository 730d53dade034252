"""Bi-periodic Padovan and Perrin sequences, symbolic and modular.

Both sequences follow t_n = a*t_{n-2} + t_{n-3} for even n and
t_n = b*t_{n-2} + t_{n-3} for odd n; Padovan starts (1, 0, a), Perrin
starts (3, 0, 2).  Symbolic terms are exact bivariate polynomials in a, b;
modular terms are plain ints in [0, m).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .modular import is_prime


class NotTwinPrime(ValueError):
    """Raised when a twin-prime parameter set is required but absent."""


class BiPoly:
    """Bivariate polynomial in a and b with exact integer coefficients.

    Stored as a map from exponent pairs (i, j) of a^i * b^j to nonzero
    coefficients.  Immutable by convention; all operations return new
    instances.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[tuple[int, int], int] | None = None):
        self.coeffs: dict[tuple[int, int], int] = {
            k: v for k, v in (coeffs or {}).items() if v != 0
        }

    @classmethod
    def const(cls, c: int) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def one(cls) -> "BiPoly":
        return cls.const(1)

    @classmethod
    def a(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def b(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    def _as_poly(self, other: "BiPoly | int") -> "BiPoly | None":
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, int):
            return BiPoly.const(other)
        return None

    def __add__(self, other: "BiPoly | int") -> "BiPoly":
        o = self._as_poly(other)
        if o is None:
            return NotImplemented
        out = dict(self.coeffs)
        for k, v in o.coeffs.items():
            out[k] = out.get(k, 0) + v
        return BiPoly(out)

    __radd__ = __add__

    def __sub__(self, other: "BiPoly | int") -> "BiPoly":
        o = self._as_poly(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: int) -> "BiPoly":
        return (-self) + other

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -v for k, v in self.coeffs.items()})

    def __mul__(self, other: "BiPoly | int") -> "BiPoly":
        o = self._as_poly(other)
        if o is None:
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in o.coeffs.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def swap(self) -> "BiPoly":
        """Exchange the roles of a and b."""
        return BiPoly({(j, i): c for (i, j), c in self.coeffs.items()})

    def evaluate(self, a: int, b: int) -> int:
        return sum(c * a**i * b**j for (i, j), c in self.coeffs.items())

    def evaluate_mod(self, a: int, b: int, m: int) -> int:
        return sum(
            c * pow(a, i, m) * pow(b, j, m) for (i, j), c in self.coeffs.items()
        ) % m

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def total_degree(self) -> int:
        return max((i + j for i, j in self.coeffs), default=0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BiPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == BiPoly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def _monomials(self) -> list[tuple[tuple[int, int], int]]:
        # canonical order: total degree descending, then a-degree descending
        return sorted(self.coeffs.items(), key=lambda kv: (-sum(kv[0]), -kv[0][0]))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for (i, j), c in self._monomials():
            mag = abs(c)
            body = ""
            if i:
                body += "a" if i == 1 else f"a^{i}"
            if j:
                body += "b" if j == 1 else f"b^{j}"
            if mag != 1 or not body:
                body = f"{mag}{body}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"BiPoly({self})"


_PADOVAN_INIT_SYM = (BiPoly.one(), BiPoly.zero(), BiPoly.a())
_PERRIN_INIT_SYM = (BiPoly.const(3), BiPoly.zero(), BiPoly.const(2))


def _sym_terms(init: tuple[BiPoly, BiPoly, BiPoly], count: int) -> list[BiPoly]:
    terms = list(init[:count])
    a, b = BiPoly.a(), BiPoly.b()
    while len(terms) < count:
        n = len(terms)
        coeff = a if n % 2 == 0 else b
        terms.append(coeff * terms[n - 2] + terms[n - 3])
    return terms


def padovan_sym_terms(count: int) -> list[BiPoly]:
    """P_0 .. P_{count-1} as exact polynomials in a, b."""
    return _sym_terms(_PADOVAN_INIT_SYM, count)


def perrin_sym_terms(count: int) -> list[BiPoly]:
    """R_0 .. R_{count-1} as exact polynomials in a, b."""
    return _sym_terms(_PERRIN_INIT_SYM, count)


def padovan_sym(n: int) -> BiPoly:
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    return padovan_sym_terms(n + 1)[n]


def perrin_sym(n: int) -> BiPoly:
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    return perrin_sym_terms(n + 1)[n]


@dataclass(frozen=True)
class SeqParams:
    """The coefficient pair (a, b), optionally with a modulus.

    With a modulus m >= 2 the coefficients are stored reduced mod m (a
    twin-prime pair (p-2, p) keeps a = p-2 literally; b = p reduces to 0).
    The twin-prime flag is decided from the values as given, before
    reduction: (a, b) = (p-2, p) with p the modulus and both entries prime.
    """

    a: int
    b: int
    modulus: int | None = None
    is_twin_prime: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        m = self.modulus
        if m is None:
            object.__setattr__(self, "is_twin_prime", False)
            return
        if not isinstance(m, int):
            m = int(m)  # accepts PrimeModulus
            object.__setattr__(self, "modulus", m)
        if m < 2:
            raise ValueError(f"modulus must be >= 2, got {m}")
        twin = (
            m >= 5
            and self.b == m
            and self.a == m - 2
            and is_prime(m)
            and is_prime(m - 2)
        )
        object.__setattr__(self, "is_twin_prime", twin)
        object.__setattr__(self, "a", self.a % m)
        object.__setattr__(self, "b", self.b % m)

    @classmethod
    def twin_prime(cls, p: int) -> "SeqParams":
        """Params (p-2, p) mod p; raises NotTwinPrime unless both are prime."""
        if p < 5 or not (is_prime(p) and is_prime(p - 2)):
            raise NotTwinPrime(f"{p} does not head a twin prime pair (p-2, p)")
        return cls(p - 2, p, modulus=p)

    def swapped(self) -> "SeqParams":
        """Same modulus with the coefficient order reversed."""
        return SeqParams(self.b, self.a, modulus=self.modulus)

    def _require_modulus(self) -> int:
        if self.modulus is None:
            raise ValueError("operation requires params with a modulus")
        return self.modulus


def _mod_terms(init: tuple[int, int, int], params: SeqParams, count: int) -> list[int]:
    m = params._require_modulus()
    a, b = params.a, params.b
    terms = [x % m for x in init][:count]
    while len(terms) < count:
        n = len(terms)
        coeff = a if n % 2 == 0 else b
        terms.append((coeff * terms[n - 2] + terms[n - 3]) % m)
    return terms


def padovan_mod(params: SeqParams, count: int) -> list[int]:
    """P_0 .. P_{count-1} mod m."""
    return _mod_terms((1, 0, params.a), params, count)


def perrin_mod(params: SeqParams, count: int) -> list[int]:
    """R_0 .. R_{count-1} mod m."""
    return _mod_terms((3, 0, 2), params, count)


def seq_period(params: SeqParams, kind: str) -> int:
    """Exact minimal period of the modular sequence.

    The order-3 step has trailing coefficient 1, hence is invertible over
    Z_m and the sequence is purely periodic (no preperiod).  The scan first
    finds the recurrence of the initial parity-tagged state, which happens
    at an even offset, then minimizes over divisors so that a sequence
    insensitive to the parity alternation reports its true (possibly odd)
    period.
    """
    if kind not in ("padovan", "perrin"):
        raise ValueError(f"kind must be 'padovan' or 'perrin', got {kind!r}")
    m = params._require_modulus()
    gen = padovan_mod(params, 8) if kind == "padovan" else perrin_mod(params, 8)
    a, b = params.a, params.b

    def extend(upto: int) -> None:
        while len(gen) < upto:
            n = len(gen)
            coeff = a if n % 2 == 0 else b
            gen.append((coeff * gen[n - 2] + gen[n - 3]) % m)

    init = tuple(gen[:3])
    limit = 2 * m**3 + 4  # parity-tagged state space bound
    n = 2
    while n <= limit:
        extend(n + 3)
        if tuple(gen[n : n + 3]) == init:
            break
        n += 2
    else:
        raise AssertionError("period scan exceeded the state-space bound")
    aligned = n
    extend(2 * aligned)
    for d in sorted(d for d in range(1, aligned + 1) if aligned % d == 0):
        if all(gen[i + d] == gen[i] for i in range(aligned)):
            return d
    return aligned


def padovan_gf_numerator() -> list[BiPoly]:
    """Numerator 1 - b*x^2 + x^3 of the generating function, as x-coefficients."""
    return [BiPoly.one(), BiPoly.zero(), -BiPoly.b(), BiPoly.one()]


def gf_expand(
    numerator: Sequence[BiPoly | int],
    count: int,
    params: SeqParams | None = None,
) -> list[BiPoly] | list[int]:
    """First `count` series coefficients of numerator / denominator.

    The denominator is fixed to 1 - (a+b)x^2 + ab*x^4 - x^6, so coefficients
    obey c_n = num_n + (a+b)c_{n-2} - ab*c_{n-4} + c_{n-6}.  With no params
    the expansion is fully symbolic (BiPoly terms); with params it is exact
    at integer (a, b), reduced mod m when params carry a modulus.
    """
    if count < 0:
        raise ValueError(f"count must be nonnegative, got {count}")

    if params is None:
        nums = [n if isinstance(n, BiPoly) else BiPoly.const(n) for n in numerator]
        apb = BiPoly.a() + BiPoly.b()
        ab = BiPoly.a() * BiPoly.b()
        out_sym: list[BiPoly] = []
        for n in range(count):
            c = nums[n] if n < len(nums) else BiPoly.zero()
            if n >= 2:
                c = c + apb * out_sym[n - 2]
            if n >= 4:
                c = c - ab * out_sym[n - 4]
            if n >= 6:
                c = c + out_sym[n - 6]
            out_sym.append(c)
        return out_sym

    a, b = params.a, params.b
    m = params.modulus
    nums_int = [
        n.evaluate(a, b) if isinstance(n, BiPoly) else int(n) for n in numerator
    ]
    out: list[int] = []
    for n in range(count):
        c = nums_int[n] if n < len(nums_int) else 0
        if n >= 2:
            c += (a + b) * out[n - 2]
        if n >= 4:
            c -= a * b * out[n - 4]
        if n >= 6:
            c += out[n - 6]
        out.append(c % m if m is not None else c)
    return out


def padovan_even_binomial(k: int, p: "int") -> int:
    """Closed binomial form for P_{2k} mod p under twin-prime coefficients.

    (-1)^k * sum_{i=0..k//3} (-1)^i C(k-2i, i) 2^(k-3i), computed with exact
    binomial coefficients and reduced mod p at the end.
    """
    if k < 0:
        raise ValueError(f"index must be nonnegative, got {k}")
    pv = int(p)
    total = sum(
        (-1) ** i * math.comb(k - 2 * i, i) * 2 ** (k - 3 * i)
        for i in range(k // 3 + 1)
    )
    return (-1) ** k * total % pv


def padovan_fib_form(m: int, p: "int") -> int:
    """P_m mod p through Fibonacci numbers, under twin-prime coefficients.

    (-1)^k (F_{k+3} - 1) for m = 2k and (-1)^(k-1) (F_{k+2} - 1) for
    m = 2k + 1.
    """
    from .fibonacci import fib_mod

    if m < 0:
        raise ValueError(f"index must be nonnegative, got {m}")
    pv = int(p)
    k, odd = divmod(m, 2)
    if odd:
        return (-1) ** (k - 1) * (fib_mod(k + 2, pv) - 1) % pv
    return (-1) ** k * (fib_mod(k + 3, pv) - 1) % pv


def perrin_padovan_identity(n: int) -> bool:
    """Exact symbolic check of the Perrin-from-Padovan relation at index n.

    R_n(a,b) = 3 P_{n-3} + 2 P_{n-2}, taken at (a,b) for even n and at
    (b,a) for odd n.  Fully symbolic, no evaluation involved.
    """
    if n < 3:
        raise ValueError(f"the relation needs n >= 3, got {n}")
    pad = padovan_sym_terms(n)
    lhs = perrin_sym(n)
    rhs = 3 * pad[n - 3] + 2 * pad[n - 2]
    if n % 2 == 1:
        rhs = rhs.swap()
    return lhs == rhs
