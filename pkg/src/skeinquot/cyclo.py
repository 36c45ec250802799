"""Exact arithmetic in the cyclotomic field Q(zeta_p) and its residue fields.

Elements are stored on the power basis zeta^0 .. zeta^(p-2) with a common
positive denominator.  Primitive 2p-th roots live in the same field because
p is odd: -zeta^k has order 2p for every k not divisible by p.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence


class LevelError(ValueError):
    pass


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
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


def primes_between(lo: int, hi: int) -> list[int]:
    return [n for n in range(max(lo, 2), hi + 1) if is_prime(n)]


def check_level(p: int) -> int:
    if not isinstance(p, int) or p < 5 or p % 2 == 0 or not is_prime(p):
        raise LevelError(f"level must be an odd prime >= 5, got {p!r}")
    return p


def level_flags(p: int) -> list[str]:
    """Report-only flags; p = 1 mod 4 is accepted for arithmetic."""
    return [] if p % 4 == 3 else ["p=1mod4:lattice-restricted-to-Z[zeta_p]"]


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = den
    for c in num:
        if g == 1:
            break
        g = math.gcd(g, c)
    if g > 1:
        num = [c // g for c in num]
        den //= g
    if not any(num):
        den = 1
    return tuple(num), den


class CycNum:
    """An element sum_k c_k zeta_p^k of Q(zeta_p), immutable."""

    __slots__ = ("p", "num", "den", "_hash")

    def __init__(self, p: int, num: Sequence[int], den: int = 1, _raw: bool = False):
        self.p = p
        if _raw:
            self.num, self.den = tuple(num), den
        else:
            if len(num) != p - 1:
                raise ValueError(f"need {p - 1} coefficients, got {len(num)}")
            self.num, self.den = _normalize(list(num), den)
        self._hash = None

    # construction -------------------------------------------------------
    @classmethod
    def from_int(cls, p: int, n: int) -> CycNum:
        num = [0] * (p - 1)
        num[0] = n
        return cls(p, num, 1, _raw=True)

    @classmethod
    def from_fraction(cls, p: int, x) -> CycNum:
        x = Fraction(x)
        num = [0] * (p - 1)
        num[0] = x.numerator
        return cls(p, num, x.denominator, _raw=True)

    @classmethod
    def from_long(cls, p: int, long: Sequence[int], den: int = 1) -> CycNum:
        """From a length-p vector on zeta^0..zeta^(p-1) (not reduced)."""
        top = long[p - 1]
        return cls(p, [long[k] - top for k in range(p - 1)], den)

    @classmethod
    def zeta_power(cls, p: int, k: int) -> CycNum:
        long = [0] * p
        long[k % p] = 1
        return cls.from_long(p, long)

    @classmethod
    def root2p(cls, p: int, m: int) -> CycNum:
        """exp(pi i m / p) under the principal embedding, as a field element."""
        m %= 2 * p
        if m % 2 == 0:
            return cls.zeta_power(p, m // 2)
        return -cls.zeta_power(p, (m + p) // 2)

    @classmethod
    def from_fractions(cls, p: int, coeffs: Sequence) -> CycNum:
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return cls(p, [c.numerator * (den // c.denominator) for c in fr], den)

    # basics ---------------------------------------------------------------
    def coeffs(self) -> list[Fraction]:
        return [Fraction(c, self.den) for c in self.num]

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self.num[0], self.den)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.den == 1 and self.num[0] == other and not any(self.num[1:])
        if not isinstance(other, CycNum):
            return NotImplemented
        return self.p == other.p and self.den == other.den and self.num == other.num

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.p, self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"CycNum({serialize_cyc(self)})"

    def _coerce(self, other) -> CycNum:
        if isinstance(other, CycNum):
            if other.p != self.p:
                raise ValueError("mixing different levels")
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum.from_fraction(self.p, other)
        return NotImplemented

    # ring operations -------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return CycNum(self.p, [a + b for a, b in zip(self.num, other.num)], self.den)
        d1, d2 = self.den, other.den
        return CycNum(self.p, [a * d2 + b * d1 for a, b in zip(self.num, other.num)], d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.p, [-a for a in self.num], self.den, _raw=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return CycNum(self.p, [a * other.numerator for a in self.num],
                          self.den * other.denominator)
        if not isinstance(other, CycNum):
            return NotImplemented
        p = self.p
        long = [0] * p
        a, b = self.num, other.num
        nz_b = [(j, y) for j, y in enumerate(b) if y]
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in nz_b:
                k = i + j
                if k >= p:
                    k -= p
                long[k] += x * y
        top = long[p - 1]
        return CycNum(p, [long[k] - top for k in range(p - 1)], self.den * other.den)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = CycNum.from_int(self.p, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def galois(self, t: int) -> CycNum:
        """Apply sigma_t: zeta -> zeta^t (t coprime to p)."""
        p = self.p
        if t % p == 0:
            raise ValueError("t must be coprime to p")
        long = [0] * p
        for k, c in enumerate(self.num):
            if c:
                long[(k * t) % p] += c
        return CycNum.from_long(p, long, self.den)

    def conj(self) -> CycNum:
        return self.galois(-1)

    def norm(self) -> Fraction:
        """Field norm to Q."""
        return (self * self._cofactor()).rational()

    def _cofactor(self) -> CycNum:
        prod = CycNum.from_int(self.p, 1)
        for t in range(2, self.p):
            prod = prod * self.galois(t)
        return prod

    def inverse(self) -> CycNum:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return CycNum.from_fraction(self.p, 1 / self.rational())
        cof = self._cofactor()
        n = (self * cof).rational()
        return cof * (1 / n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other


def zero(p: int) -> CycNum:
    return CycNum.from_int(p, 0)


def one(p: int) -> CycNum:
    return CycNum.from_int(p, 1)


# roots and embeddings -----------------------------------------------------

def root_exponent_unitary(p: int) -> int:
    """The t with A_t = -zeta^(t(p+1)/2) equal to the unitary root A_p."""
    return ((p + 1) // 2) % p


def make_root(p: int, unitary: bool = True, t: int | None = None) -> CycNum:
    """Primitive 2p-th root A_t = -zeta^(t(p+1)/2), so that A_t^2 = zeta^t.

    With ``unitary`` (and no explicit t) this is exactly
    A_p = (-1)^((p-1)/2) exp((p+1) pi i / 2p) under the principal embedding.
    """
    check_level(p)
    if t is None:
        t = root_exponent_unitary(p) if unitary else 1
    if t % p == 0:
        raise ValueError("root exponent must be coprime to p")
    return -CycNum.zeta_power(p, t * (p + 1) // 2)


def unitary_root_numeric(p: int) -> complex:
    return (-1) ** ((p - 1) // 2) * cmath.exp(1j * math.pi * (p + 1) / (2 * p))


@dataclass(frozen=True)
class Embedding:
    """sigma_t: zeta -> exp(2 pi i t / p); t in 1..(p-1)/2 covers S(p) once."""

    p: int
    t: int = 1

    def __post_init__(self):
        if self.t % self.p == 0:
            raise ValueError("embedding index must be coprime to p")


def embeddings(p: int) -> list[Embedding]:
    return [Embedding(p, t) for t in range(1, (p - 1) // 2 + 1)]


def complex_embed(x: CycNum, e: Embedding | int = 1) -> complex:
    t = e.t if isinstance(e, Embedding) else e
    p = x.p
    total = 0j
    for k, c in enumerate(x.num):
        if c:
            total += c * cmath.exp(2j * math.pi * ((t * k) % p) / p)
    return total / x.den


# roots of unity -------------------------------------------------------------

@dataclass(frozen=True)
class RootOfUnityResult:
    is_root: bool
    order: int | None = None
    witness: str = ""
    modulus: float | None = None

    def __bool__(self):
        return self.is_root


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def is_root_of_unity(x: CycNum, tol: float = 1e-9) -> RootOfUnityResult:
    """Roots of unity in Q(zeta_p) are the +-zeta^k, so x^(2p) = 1 decides."""
    if x.is_zero():
        raise ValueError("zero is not a unit")
    p = x.p
    for t in range(1, p):
        mod = abs(complex_embed(x, t))
        if abs(mod - 1) > tol:
            return RootOfUnityResult(False, None, f"embedding {t}", mod)
    for d in _divisors(2 * p):
        if x ** d == 1:
            return RootOfUnityResult(True, d, "exact power", 1.0)
    return RootOfUnityResult(False, None, f"x^{2 * p} != 1 exactly", 1.0)


def multiplicative_order(x: CycNum) -> int | None:
    r = is_root_of_unity(x)
    return r.order if r else None


# serialization -----------------------------------------------------------------

def serialize_cyc(x: CycNum) -> str:
    parts = []
    for c in x.coeffs():
        parts.append(f"{c.numerator}/{c.denominator}")
    return f"p:{x.p};coeffs:" + ",".join(parts)


def parse_cyc(text: str) -> CycNum:
    head, _, body = text.partition(";")
    if not head.startswith("p:") or not body.startswith("coeffs:"):
        raise ValueError(f"malformed cyclotomic literal: {text!r}")
    p = int(head[2:])
    entries = body[len("coeffs:"):].split(",")
    if len(entries) != p - 1:
        raise ValueError(f"expected {p - 1} coefficients, got {len(entries)}")
    fr = []
    for e in entries:
        n, _, d = e.partition("/")
        f = Fraction(int(n), int(d))
        if f.denominator != int(d) or f.numerator != int(n):
            raise ValueError(f"coefficient not in lowest terms: {e!r}")
        fr.append(f)
    return CycNum.from_fractions(p, fr)


# residue fields ------------------------------------------------------------------

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mulmod(a: Sequence[int], b: Sequence[int], q: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % q
    return _poly_trim(out)


def cyclotomic_mod(p: int, q: int) -> list[int]:
    """Phi_p mod q, low-degree first."""
    return [1 % q] * p


def multiplicative_order_mod(q: int, p: int) -> int:
    f, x = 1, q % p
    while x != 1:
        x = x * q % p
        f += 1
    return f


@lru_cache(maxsize=None)
def _factor_cyclotomic(p: int, q: int) -> tuple[tuple[int, ...], ...]:
    from sympy.polys.domains import ZZ
    from sympy.polys.galoistools import gf_factor

    high_first = [1] * p
    _, factors = gf_factor(high_first, q, ZZ)
    moduli = []
    for fac, mult in factors:
        if mult != 1:
            raise ArithmeticError("Phi_p is not squarefree mod q")
        moduli.append(tuple(int(c) % q for c in reversed(fac)))
    return tuple(sorted(moduli))


@dataclass(frozen=True)
class SplittingData:
    q: int
    p: int
    f: int
    count: int
    moduli: tuple[tuple[int, ...], ...]


def splitting_data(q: int, p: int) -> SplittingData:
    check_level(p)
    if not is_prime(q):
        raise ValueError(f"q={q} is not prime")
    if q == p:
        raise ValueError(f"q={q} is ramified in Q(zeta_{p}); excluded from reduction")
    f = multiplicative_order_mod(q, p)
    moduli = _factor_cyclotomic(p, q)
    if len(moduli) != (p - 1) // f or any(len(m) - 1 != f for m in moduli):
        raise ArithmeticError("factorization disagrees with the residue degree")
    return SplittingData(q, p, f, len(moduli), moduli)


class ResidueField:
    """F_q[x]/(m) with m an irreducible factor of Phi_p mod q; x is the image of zeta."""

    def __init__(self, p: int, q: int, index: int = 0):
        data = splitting_data(q, p)
        if not 0 <= index < data.count:
            raise IndexError(f"modulus index {index} out of range 0..{data.count - 1}")
        self.p, self.q, self.f, self.index = p, q, data.f, index
        self.modulus = data.moduli[index]
        # reduction table of zeta^k, k = 0..p-1
        self._zeta_pows = []
        cur = self.one()
        gen = self.from_poly([0, 1])
        for _ in range(p):
            self._zeta_pows.append(cur)
            cur = self.mul(cur, gen)

    def __repr__(self):
        return f"ResidueField(p={self.p}, q={self.q}, f={self.f}, index={self.index})"

    def __eq__(self, other):
        return isinstance(other, ResidueField) and (self.p, self.q, self.index) == (
            other.p, other.q, other.index)

    def __hash__(self):
        return hash((self.p, self.q, self.index))

    # elements are tuples of f ints (low-degree first) ----------------------------
    def zero(self) -> tuple[int, ...]:
        return (0,) * self.f

    def one(self) -> tuple[int, ...]:
        return (1,) + (0,) * (self.f - 1)

    def from_int(self, n: int) -> tuple[int, ...]:
        return (n % self.q,) + (0,) * (self.f - 1)

    def from_poly(self, coeffs: Sequence[int]) -> tuple[int, ...]:
        q, f, m = self.q, self.f, self.modulus
        a = [c % q for c in coeffs]
        for k in range(len(a) - 1, f - 1, -1):
            c = a[k]
            if c:
                # m is monic of degree f
                for j in range(f + 1):
                    a[k - f + j] = (a[k - f + j] - c * m[j]) % q
        a = a[:f] + [0] * (f - len(a[:f]))
        return tuple(a)

    def add(self, a, b):
        q = self.q
        return tuple((x + y) % q for x, y in zip(a, b))

    def sub(self, a, b):
        q = self.q
        return tuple((x - y) % q for x, y in zip(a, b))

    def neg(self, a):
        q = self.q
        return tuple((-x) % q for x in a)

    def mul(self, a, b):
        if self.f == 1:
            return ((a[0] * b[0]) % self.q,)
        return self.from_poly(poly_mulmod(a, b, self.q) or [0])

    def pow(self, a, n: int):
        if n < 0:
            return self.pow(self.inv(a), -n)
        r = self.one()
        while n:
            if n & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            n >>= 1
        return r

    def inv(self, a):
        if not any(a):
            raise ZeroDivisionError("inverse of zero in residue field")
        return self.pow(a, self.q ** self.f - 2)

    def order(self, a) -> int:
        """Multiplicative order of a nonzero element."""
        n = self.q ** self.f - 1
        o = n
        for r in _prime_factors(n):
            while o % r == 0 and self.pow(a, o // r) == self.one():
                o //= r
        return o

    def reduce(self, x: CycNum):
        if x.den % self.q == 0:
            raise ArithmeticError(
                f"denominator {x.den} divisible by q={self.q} in {serialize_cyc(x)}")
        acc = [0] * self.f
        for k, c in enumerate(x.num):
            if c:
                zp = self._zeta_pows[k]
                for j in range(self.f):
                    acc[j] += c * zp[j]
        inv_den = pow(x.den, -1, self.q)
        return tuple((v * inv_den) % self.q for v in acc)

    def serialize(self, a) -> str:
        return (f"q:{self.q};f:{self.f};mod:" + ",".join(map(str, self.modulus))
                + ";val:" + ",".join(map(str, a)))

    def parse(self, text: str):
        fields = dict(part.split(":", 1) for part in text.split(";"))
        if int(fields["q"]) != self.q or int(fields["f"]) != self.f:
            raise ValueError("residue literal belongs to another field")
        if tuple(int(c) for c in fields["mod"].split(",")) != self.modulus:
            raise ValueError("residue literal uses another modulus")
        val = tuple(int(c) for c in fields["val"].split(","))
        if len(val) != self.f or any(not 0 <= c < self.q for c in val):
            raise ValueError(f"malformed residue value {fields['val']!r}")
        return val


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def reduce_mod(x: CycNum, F: ResidueField):
    return F.reduce(x)


def smallest_split_prime(p: int, avoid: Iterable[int] = (), start: int = 2) -> int:
    bad = set(avoid)
    q = max(start, 3)
    while True:
        if q % p == 1 and is_prime(q) and q not in bad and (2 * p) % q != 0:
            return q
        q += 1
