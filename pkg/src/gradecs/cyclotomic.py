"""Exact arithmetic in cyclotomic fields Q(zeta_M) and polynomials over them.

Elements are stored in the power basis 1, z, ..., z^(phi(M)-1) where
z = zeta_M = e^(2*pi*i/M), reduced modulo the M-th cyclotomic polynomial.
The reduced representation is canonical, so equality is coefficient
equality (after coercing both operands into a common modulus).

All coefficients are `fractions.Fraction`; nothing here is approximate.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import ModulusOverflow, NotAPowerPoly

MAX_MODULUS = 2**31

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _mobius(n: int) -> int:
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def _int_poly_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return tuple(out)


def _int_poly_divexact(num: tuple[int, ...], den: tuple[int, ...]) -> tuple[int, ...]:
    # Exact division of integer polynomials, den monic up to sign.
    num_l = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for k in range(len(out) - 1, -1, -1):
        c = num_l[k + dn] // den[dn]
        out[k] = c
        if c:
            for j, dj in enumerate(den):
                num_l[k + j] -= c * dj
    assert all(v == 0 for v in num_l), "non-exact cyclotomic division"
    return tuple(out)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(M: int) -> tuple[int, ...]:
    """Coefficients (low degree first) of the M-th cyclotomic polynomial.

    Computed by the Moebius product  Phi_M(x) = prod_{d|M} (x^{M/d}-1)^{mu(d)}.

    >>> cyclotomic_polynomial(4)
    (1, 0, 1)
    >>> cyclotomic_polynomial(1)
    (-1, 1)
    """
    if M < 1:
        raise ValueError("modulus must be positive")
    if M > MAX_MODULUS:
        raise ModulusOverflow(f"modulus {M} exceeds bound {MAX_MODULUS}")
    num: tuple[int, ...] = (1,)
    dens: list[tuple[int, ...]] = []
    for d in range(1, M + 1):
        if M % d == 0:
            mu = _mobius(d)
            if mu == 0:
                continue
            factor = tuple([-1] + [0] * (M // d - 1) + [1])  # x^{M/d} - 1
            if mu == 1:
                num = _int_poly_mul(num, factor)
            else:
                dens.append(factor)
    for den in dens:
        num = _int_poly_divexact(num, den)
    return num


@lru_cache(maxsize=None)
def euler_phi(M: int) -> int:
    return len(cyclotomic_polynomial(M)) - 1


@lru_cache(maxsize=None)
def _power_reduction_table(M: int, count: int) -> tuple[tuple[Fraction, ...], ...]:
    """Reductions of z^k mod Phi_M for k = phi(M) .. phi(M)+count-1."""
    phi = euler_phi(M)
    phi_poly = cyclotomic_polynomial(M)
    rows: list[tuple[Fraction, ...]] = []
    if count <= 0:
        return ()
    # z^phi = -(c_0 + c_1 z + ... + c_{phi-1} z^{phi-1}); leading coeff is 1.
    cur = [Fraction(-c) for c in phi_poly[:phi]]
    rows.append(tuple(cur))
    for _ in range(count - 1):
        top = cur[-1]
        nxt = [_ZERO] + cur[:-1]
        if top:
            for i in range(phi):
                nxt[i] += top * -phi_poly[i]
        cur = nxt
        rows.append(tuple(cur))
    return tuple(rows)


def _reduce(M: int, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    phi = euler_phi(M)
    if len(coeffs) <= phi:
        return tuple(coeffs) + (_ZERO,) * (phi - len(coeffs))
    # Table sizes are quantized to multiples of phi so the cache stays small.
    needed = len(coeffs) - phi
    quantum = max(phi, 1)
    count = ((needed + quantum - 1) // quantum) * quantum
    table = _power_reduction_table(M, count)
    out = list(coeffs[:phi]) + [_ZERO] * (phi - len(coeffs[:phi]))
    for k in range(phi, len(coeffs)):
        c = coeffs[k]
        if c:
            row = table[k - phi]
            for i in range(phi):
                out[i] += c * row[i]
    return tuple(out)


class CycloNum:
    """An element of Q(zeta_M), canonically reduced.

    The embedding zeta_M = e^(2*pi*i/M) is fixed once and for all; coercion
    between moduli maps zeta_M to zeta_{M'}^(M'/M).
    """

    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus: int, coeffs) -> None:
        if modulus < 1 or modulus > MAX_MODULUS:
            raise ModulusOverflow(f"modulus {modulus} out of range")
        self.modulus = modulus
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        self.coeffs = _reduce(modulus, cs)

    # -- constructors ---------------------------------------------------

    @staticmethod
    def from_rational(q, modulus: int = 1) -> "CycloNum":
        return CycloNum(modulus, [Fraction(q)])

    @staticmethod
    def zeta_power(modulus: int, k: int) -> "CycloNum":
        """zeta_modulus^k."""
        k %= modulus
        return CycloNum(modulus, [_ZERO] * k + [_ONE])

    @staticmethod
    def from_exponent(q) -> "CycloNum":
        """e^(2*pi*i*q) for a rational q, in the minimal modulus."""
        q = Fraction(q)
        den = q.denominator
        return CycloNum.zeta_power(den, q.numerator % den)

    # -- coercion ---------------------------------------------------------

    def rescale(self, M: int) -> "CycloNum":
        """The same number inside Q(zeta_M); requires modulus | M."""
        if M == self.modulus:
            return self
        if M % self.modulus != 0:
            raise ValueError("cannot rescale to a non-multiple modulus")
        step = M // self.modulus
        out = [_ZERO] * ((euler_phi(self.modulus)) * step)
        for i, c in enumerate(self.coeffs):
            if c:
                out[i * step] = c
        return CycloNum(M, out)

    @staticmethod
    def _common(a: "CycloNum", b: "CycloNum") -> tuple["CycloNum", "CycloNum"]:
        if a.modulus == b.modulus:
            return a, b
        M = a.modulus * b.modulus // gcd(a.modulus, b.modulus)
        if M > MAX_MODULUS:
            raise ModulusOverflow(f"lcm modulus {M} exceeds bound")
        return a.rescale(M), b.rescale(M)

    def _coerce(self, other) -> "CycloNum":
        if isinstance(other, CycloNum):
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNum.from_rational(other, 1)
        return NotImplemented  # type: ignore[return-value]

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and all(c == 0 for c in self.coeffs[1:])

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    # -- arithmetic ---------------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = CycloNum._common(self, other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        # Canonical enough for sets within one modulus; cross-modulus use
        # relies on __eq__ only.
        return hash((self.modulus, self.coeffs))

    def __add__(self, other) -> "CycloNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = CycloNum._common(self, other)
        return CycloNum(a.modulus, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> "CycloNum":
        return CycloNum(self.modulus, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> "CycloNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if isinstance(other, CycloNum) and other.modulus == 1:
            q = other.coeffs[0]
            return CycloNum(self.modulus, [c * q for c in self.coeffs])
        a, b = CycloNum._common(self, other)
        n = len(a.coeffs)
        out = [_ZERO] * (2 * n - 1)
        for i, ai in enumerate(a.coeffs):
            if ai:
                for j, bj in enumerate(b.coeffs):
                    if bj:
                        out[i + j] += ai * bj
        return CycloNum(a.modulus, out)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        M = self.modulus
        mod = [Fraction(c) for c in cyclotomic_polynomial(M)]
        a = list(self.coeffs)
        # Extended gcd of a and Phi_M over Q[x]; gcd is a nonzero constant.
        r0, r1 = mod, a
        s0, s1 = [_ZERO], [_ONE]

        def deg(p):
            d = len(p) - 1
            while d >= 0 and p[d] == 0:
                d -= 1
            return d

        while True:
            d1 = deg(r1)
            if d1 <= 0:
                break
            d0 = deg(r0)
            if d0 < d1:
                r0, r1 = r1, r0
                s0, s1 = s1, s0
                continue
            c = r0[d0] / r1[d1]
            shift = d0 - d1
            for i in range(d1 + 1):
                r0[i + shift] -= c * r1[i]
            if len(s0) < len(s1) + shift:
                s0 = s0 + [_ZERO] * (len(s1) + shift - len(s0))
            for i in range(len(s1)):
                s0[i + shift] -= c * s1[i]
        const = r1[deg(r1)] if deg(r1) == 0 else None
        if const is None or const == 0:
            raise ZeroDivisionError("element is a zero divisor (bug)")
        inv = [c / const for c in s1]
        return CycloNum(M, inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "CycloNum":
        if n < 0:
            return self.inverse() ** (-n)
        result = CycloNum.from_rational(1, self.modulus)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*z{self.modulus}")
            else:
                terms.append(f"{c}*z{self.modulus}^{i}")
        return " + ".join(terms) if terms else "0"


def cyclo_arith(a: CycloNum, b: CycloNum, op: str) -> CycloNum:
    """Spec-surface dispatcher: op in {'add', 'mul', 'inv'} ('inv' ignores b)."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    raise ValueError(f"unknown op {op!r}")


class CycloPoly:
    """A univariate polynomial over a cyclotomic field, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs) -> None:
        cs = []
        for c in coeffs:
            if not isinstance(c, CycloNum):
                c = CycloNum.from_rational(c)
            cs.append(c)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero() -> "CycloPoly":
        return CycloPoly([])

    @staticmethod
    def one() -> "CycloPoly":
        return CycloPoly([1])

    @staticmethod
    def x_power_minus(k: int, c) -> "CycloPoly":
        """x^k - c."""
        if not isinstance(c, CycloNum):
            c = CycloNum.from_rational(c)
        return CycloPoly([-c] + [CycloNum.from_rational(0)] * (k - 1) + [CycloNum.from_rational(1)])

    @staticmethod
    def from_int_coeffs(coeffs) -> "CycloPoly":
        return CycloPoly(list(coeffs))

    # -- basics -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycloPoly):
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(tuple(c.coeffs for c in self.coeffs))

    def __add__(self, other: "CycloPoly") -> "CycloPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        zero = CycloNum.from_rational(0)
        a = list(self.coeffs) + [zero] * (n - len(self.coeffs))
        b = list(other.coeffs) + [zero] * (n - len(other.coeffs))
        return CycloPoly([x + y for x, y in zip(a, b)])

    def __neg__(self) -> "CycloPoly":
        return CycloPoly([-c for c in self.coeffs])

    def __sub__(self, other: "CycloPoly") -> "CycloPoly":
        return self + (-other)

    def __mul__(self, other) -> "CycloPoly":
        if isinstance(other, (int, Fraction, CycloNum)):
            if not isinstance(other, CycloNum):
                other = CycloNum.from_rational(other)
            return CycloPoly([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return CycloPoly.zero()
        zero = CycloNum.from_rational(0)
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return CycloPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CycloPoly":
        result = CycloPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def monic(self) -> "CycloPoly":
        """Divide by the leading coefficient (a field unit)."""
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        if lead.is_one():
            return self
        inv = lead.inverse()
        return CycloPoly([c * inv for c in self.coeffs])

    def divmod(self, den: "CycloPoly") -> tuple["CycloPoly", "CycloPoly"]:
        if den.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        zero = CycloNum.from_rational(0)
        rem = list(self.coeffs)
        dn = den.degree
        lead_inv = den.coeffs[-1].inverse()
        q = [zero] * max(0, len(rem) - dn)
        for k in range(len(rem) - dn - 1, -1, -1):
            c = rem[k + dn] * lead_inv
            q[k] = c
            if not c.is_zero():
                for j, dj in enumerate(den.coeffs):
                    rem[k + j] = rem[k + j] - c * dj
        return CycloPoly(q), CycloPoly(rem[:dn])

    def divides_exactly(self, den: "CycloPoly"):
        quo, rem = self.divmod(den)
        return quo if rem.is_zero() else None

    def __repr__(self) -> str:
        if self.is_zero():
            return "CycloPoly(0)"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            parts.append(f"({c!r})*x^{i}" if i else f"({c!r})")
        return "CycloPoly(" + " + ".join(parts) + ")"


def poly_substitute_power(R: CycloPoly, d: int) -> CycloPoly:
    """Return g with g(x^d) = R(x), or raise NotAPowerPoly.

    >>> R = CycloPoly.from_int_coeffs([1, 0, -2, 0, 1])   # (x^2-1)^2
    >>> poly_substitute_power(R, 2).degree
    2
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if d == 1:
        return R
    for e, c in enumerate(R.coeffs):
        if not c.is_zero() and e % d != 0:
            raise NotAPowerPoly(f"exponent {e} not divisible by {d}")
    return CycloPoly([R.coeffs[e] for e in range(0, len(R.coeffs), d)])


def max_extractable_power(R: CycloPoly) -> int:
    """The largest d such that R(x) = g(x^d) for some polynomial g.

    For a polynomial with support S and minimal support element e0 this is
    gcd{e - e0 : e in S}; gcd over an empty set of differences (a monomial)
    returns the degree gap 0 and is treated as 1.
    """
    if R.is_zero():
        raise ValueError("zero polynomial has no extractable power")
    support = [e for e, c in enumerate(R.coeffs) if not c.is_zero()]
    e0 = support[0]
    g = 0
    for e in support[1:]:
        g = gcd(g, e - e0)
    if g == 0:
        # A monomial c*x^e0; every d | e0 extracts, so the max is e0 itself.
        return e0 if e0 >= 1 else 1
    if e0 % g != 0:
        # Extraction must also keep the low exponent on the d-grid; for
        # monic monodromy polynomials the constant term is nonzero so e0 = 0
        # and this branch is never taken.
        g = gcd(g, e0)
    return g if g >= 1 else 1
