"""The generalized quaternion algebra Q(s, t) over Z_p.

Basis 1, i, j, k with i^2 = s, j^2 = t, ij = -ji = k; the derived products
are k^2 = -st, ik = sj, ki = -sj, jk = -ti, kj = ti.  The norm form is
N(x + yi + zj + wk) = x^2 - s y^2 - t z^2 + s t w^2 and is multiplicative.
Over Z_p the algebra splits: a nonzero element is a zero divisor exactly
when its norm vanishes, and invertible otherwise.

Also provides the quaternion extensions of the bi-periodic Padovan and
Perrin sequences, in modular and exact symbolic (polynomial coefficient)
form, together with their generating-function numerators.
"""

from __future__ import annotations

from dataclasses import dataclass

from .modular import PrimeModulus, ResidueClass, _invmod
from .sequences import BiPoly, SeqParams, padovan_mod, padovan_sym_terms, perrin_mod, perrin_sym_terms


class AlgebraMismatch(ValueError):
    """Raised when combining elements of different algebras."""


class NotInvertible(ZeroDivisionError):
    """Raised when inverting an element of zero norm."""


@dataclass(frozen=True)
class AlgebraParams:
    """The algebra Q(s, t) over Z_p; s and t must be nonzero mod p."""

    s: int
    t: int
    modulus: PrimeModulus

    def __post_init__(self) -> None:
        p = self.modulus.p
        object.__setattr__(self, "s", self.s % p)
        object.__setattr__(self, "t", self.t % p)
        if self.s == 0 or self.t == 0:
            raise ValueError("algebra parameters s, t must be nonzero mod p")

    @classmethod
    def standard(cls, p: "PrimeModulus | int") -> "AlgebraParams":
        """The default algebra Q(-1, -1) over Z_p."""
        mod = p if isinstance(p, PrimeModulus) else PrimeModulus(p)
        return cls(-1, -1, mod)

    @property
    def p(self) -> int:
        return self.modulus.p

    def element(self, x: int, y: int = 0, z: int = 0, w: int = 0) -> "QuatElem":
        return QuatElem(self, x, y, z, w)

    def basis(self) -> tuple["QuatElem", "QuatElem", "QuatElem", "QuatElem"]:
        """(1, i, j, k)."""
        return (
            self.element(1),
            self.element(0, 1),
            self.element(0, 0, 1),
            self.element(0, 0, 0, 1),
        )


@dataclass(frozen=True)
class QuatElem:
    """x + y*i + z*j + w*k with coefficients reduced mod p."""

    algebra: AlgebraParams
    x: int
    y: int
    z: int
    w: int

    def __post_init__(self) -> None:
        p = self.algebra.p
        for name in ("x", "y", "z", "w"):
            object.__setattr__(self, name, getattr(self, name) % p)

    @property
    def coefficients(self) -> tuple[int, int, int, int]:
        return (self.x, self.y, self.z, self.w)

    def _check(self, other: "QuatElem") -> None:
        if other.algebra != self.algebra:
            raise AlgebraMismatch(
                f"algebras differ: {self.algebra} vs {other.algebra}"
            )

    def __add__(self, other: "QuatElem") -> "QuatElem":
        self._check(other)
        return QuatElem(
            self.algebra,
            self.x + other.x,
            self.y + other.y,
            self.z + other.z,
            self.w + other.w,
        )

    def __sub__(self, other: "QuatElem") -> "QuatElem":
        self._check(other)
        return QuatElem(
            self.algebra,
            self.x - other.x,
            self.y - other.y,
            self.z - other.z,
            self.w - other.w,
        )

    def __neg__(self) -> "QuatElem":
        return QuatElem(self.algebra, -self.x, -self.y, -self.z, -self.w)

    def __mul__(self, other: "QuatElem | int") -> "QuatElem":
        if isinstance(other, int):
            return QuatElem(
                self.algebra,
                self.x * other,
                self.y * other,
                self.z * other,
                self.w * other,
            )
        self._check(other)
        s, t = self.algebra.s, self.algebra.t
        x1, y1, z1, w1 = self.coefficients
        x2, y2, z2, w2 = other.coefficients
        return QuatElem(
            self.algebra,
            x1 * x2 + s * y1 * y2 + t * z1 * z2 - s * t * w1 * w2,
            x1 * y2 + y1 * x2 - t * z1 * w2 + t * w1 * z2,
            x1 * z2 + z1 * x2 + s * y1 * w2 - s * w1 * y2,
            x1 * w2 + w1 * x2 + y1 * z2 - z1 * y2,
        )

    def __rmul__(self, other: int) -> "QuatElem":
        return self.__mul__(other)

    def conj(self) -> "QuatElem":
        """(x, -y, -z, -w); satisfies u * conj(u) = N(u) * 1."""
        return QuatElem(self.algebra, self.x, -self.y, -self.z, -self.w)

    def norm(self) -> ResidueClass:
        """N(u) = x^2 - s y^2 - t z^2 + s t w^2 mod p."""
        s, t = self.algebra.s, self.algebra.t
        value = (
            self.x * self.x
            - s * self.y * self.y
            - t * self.z * self.z
            + s * t * self.w * self.w
        )
        return ResidueClass(value, self.algebra.modulus)

    @property
    def is_zero(self) -> bool:
        return self.coefficients == (0, 0, 0, 0)

    def is_zero_divisor(self) -> bool:
        """Nonzero with vanishing norm."""
        return not self.is_zero and self.norm().value == 0

    def inverse(self) -> "QuatElem":
        """conj(u) * N(u)^-1; raises NotInvertible when N(u) = 0."""
        n = self.norm().value
        if n == 0:
            raise NotInvertible("element has zero norm")
        return self.conj() * _invmod(n, self.algebra.p)

    def __str__(self) -> str:
        return f"({self.x}, {self.y}, {self.z}, {self.w}) in Q({self.algebra.s},{self.algebra.t}) mod {self.algebra.p}"


def _algebra_for(params: SeqParams) -> AlgebraParams:
    m = params.modulus
    if m is None:
        raise ValueError("quaternion construction requires params with a modulus")
    return AlgebraParams.standard(m)


def qp_elements(params: SeqParams, count: int) -> list[QuatElem]:
    """The first `count` Padovan quaternions P_n + P_{n+1} i + P_{n+2} j + P_{n+3} k."""
    alg = _algebra_for(params)
    terms = padovan_mod(params, count + 3)
    return [alg.element(*terms[n : n + 4]) for n in range(count)]


def qp_quaternion(n: int, params: SeqParams) -> QuatElem:
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    return qp_elements(params, n + 1)[n]


def _qr_coefficients(n: int, ab: list[int], ba: list[int]) -> tuple[int, int, int, int]:
    # even n takes (a,b) coefficients at even offsets, (b,a) at odd; odd n swaps
    if n % 2 == 0:
        return (ab[n], ba[n + 1], ab[n + 2], ba[n + 3])
    return (ba[n], ab[n + 1], ba[n + 2], ab[n + 3])


def qr_elements(params: SeqParams, count: int) -> list[QuatElem]:
    """The first `count` Perrin quaternions, with the parity-dependent
    coefficient-order swap applied per component."""
    alg = _algebra_for(params)
    ab = perrin_mod(params, count + 3)
    ba = perrin_mod(params.swapped(), count + 3)
    return [alg.element(*_qr_coefficients(n, ab, ba)) for n in range(count)]


def qr_quaternion(n: int, params: SeqParams) -> QuatElem:
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    return qr_elements(params, n + 1)[n]


@dataclass(frozen=True)
class SymQuat:
    """A quaternion with exact polynomial coefficients (symbolic a, b)."""

    x: BiPoly
    y: BiPoly
    z: BiPoly
    w: BiPoly

    @property
    def components(self) -> tuple[BiPoly, BiPoly, BiPoly, BiPoly]:
        return (self.x, self.y, self.z, self.w)

    def __add__(self, other: "SymQuat") -> "SymQuat":
        return SymQuat(*(s + o for s, o in zip(self.components, other.components)))

    def __sub__(self, other: "SymQuat") -> "SymQuat":
        return SymQuat(*(s - o for s, o in zip(self.components, other.components)))

    def __mul__(self, scalar: "BiPoly | int") -> "SymQuat":
        return SymQuat(*(c * scalar for c in self.components))

    __rmul__ = __mul__

    def evaluate_mod(self, params: SeqParams) -> QuatElem:
        """Specialize at integer (a, b) mod p in the standard algebra."""
        alg = _algebra_for(params)
        m = params.modulus
        return alg.element(
            *(c.evaluate_mod(params.a, params.b, m) for c in self.components)
        )

    def __str__(self) -> str:
        return f"({self.x}) + ({self.y})i + ({self.z})j + ({self.w})k"


def qp_symbolic(n: int) -> SymQuat:
    """Exact Padovan quaternion: components P_n, P_{n+1}, P_{n+2}, P_{n+3}."""
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    terms = padovan_sym_terms(n + 4)
    return SymQuat(*terms[n : n + 4])


def qr_symbolic(n: int) -> SymQuat:
    """Exact Perrin quaternion with the parity-dependent (a, b) swap."""
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    terms = perrin_sym_terms(n + 4)
    # even n: (ab, ba, ab, ba); odd n: (ba, ab, ba, ab)
    swap_first = n % 2 == 1
    out = []
    for offset in range(4):
        c = terms[n + offset]
        if (offset % 2 == 0) == swap_first:
            c = c.swap()
        out.append(c)
    return SymQuat(*out)


def qp_gf_numerators() -> tuple[list[BiPoly], list[BiPoly], list[BiPoly], list[BiPoly]]:
    """x-coefficient lists of the four Padovan-quaternion GF numerators.

    Componentwise expansion against 1 - (a+b)x^2 + ab x^4 - x^6 reproduces
    the quaternion coefficient streams.
    """
    one = BiPoly.one()
    zero = BiPoly.zero()
    a, b = BiPoly.a(), BiPoly.b()
    ab = a * b
    return (
        [one, zero, -b, one],
        [zero, a, one, -ab, zero, one],
        [a, one, -ab, zero, one],
        [one, a * a, zero, one - a * a * b, zero, a],
    )


def qr_gf_numerators() -> tuple[list[BiPoly], list[BiPoly], list[BiPoly], list[BiPoly]]:
    """x-coefficient lists of the four Perrin-quaternion GF numerators."""
    c = BiPoly.const
    zero = BiPoly.zero()
    a, b = BiPoly.a(), BiPoly.b()
    ab = a * b
    return (
        [c(3), zero, c(2) - 3 * a - 3 * b, c(3), b * (3 * a - c(2)), c(2) - 3 * b],
        [zero, c(2), c(3), -2 * b, c(2) - 3 * b, c(3)],
        [c(2), c(3), -2 * b, c(2) - 3 * b, c(3)],
        [c(3), 2 * a, c(2) - 3 * b, c(3) - 2 * ab, zero, c(2)],
    )
