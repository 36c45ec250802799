"""Kauffman-bracket skein evaluations at a primitive 2p-th root A.

Conventions follow the Kauffman-Lins calculus: [n] = (A^2n - A^-2n)/(A^2 - A^-2),
Delta_n = (-1)^n [n+1], theta and tetrahedral nets, and recoupling
coefficients {a b i; c d j} = Tet * Delta_i / (theta(a,d,i) theta(b,c,i)).
Every quantity is a polynomial or rational expression in A, so building at
sigma(A) agrees with applying sigma to a build at A.
"""

from __future__ import annotations

from .cyclo import CycNum, is_root_of_unity


class Skein:
    def __init__(self, A: CycNum):
        self.A = A
        self.p = A.p
        r = is_root_of_unity(A)
        if not r or r.order != 2 * self.p:
            raise ValueError("A must be a primitive 2p-th root of unity")
        self._pow = [CycNum.from_int(self.p, 1)]
        for _ in range(2 * self.p - 1):
            self._pow.append(self._pow[-1] * A)
        self._qint: dict[int, CycNum] = {}
        self._fact: dict[int, CycNum] = {0: self.one}
        self._theta: dict = {}
        self._tet: dict = {}
        self._sixj: dict = {}
        self._inv: dict = {}

    @property
    def one(self) -> CycNum:
        return self._pow[0]

    def apow(self, k: int) -> CycNum:
        return self._pow[k % (2 * self.p)]

    def inv(self, x: CycNum) -> CycNum:
        y = self._inv.get(x)
        if y is None:
            y = x.inverse()
            self._inv[x] = y
        return y

    def qint(self, n: int) -> CycNum:
        if n not in self._qint:
            if n < 0:
                self._qint[n] = -self.qint(-n)
            else:
                acc = CycNum.from_int(self.p, 0)
                for k in range(n):
                    acc = acc + self.apow(2 * (n - 1 - 2 * k))
                self._qint[n] = acc
        return self._qint[n]

    def qfact(self, n: int) -> CycNum:
        if n < 0:
            raise ValueError("negative quantum factorial")
        if n not in self._fact:
            self._fact[n] = self.qfact(n - 1) * self.qint(n)
        return self._fact[n]

    def delta(self, n: int) -> CycNum:
        d = self.qint(n + 1)
        return -d if n % 2 else d

    def twist(self, c: int) -> CycNum:
        """Dehn twist eigenvalue on an edge of color c: A^(c(c+2))."""
        return self.apow(c * (c + 2))

    def half_twist(self, a: int, b: int, c: int) -> CycNum:
        """Eigenvalue of the positive half twist of strands a, b fused to c."""
        e = c * (c + 2) - a * (a + 2) - b * (b + 2)
        val = self.apow(e // 2)
        return -val if ((a + b - c) // 2) % 2 else val

    def theta(self, a: int, b: int, c: int) -> CycNum:
        key = tuple(sorted((a, b, c)))
        if key not in self._theta:
            m, n, k = (a + b - c) // 2, (b + c - a) // 2, (a + c - b) // 2
            num = self.qfact(m + n + k + 1) * self.qfact(m) * self.qfact(n) * self.qfact(k)
            den = self.qfact(m + n) * self.qfact(n + k) * self.qfact(m + k)
            val = num * self.inv(den)
            if (m + n + k) % 2:
                val = -val
            self._theta[key] = val
        return self._theta[key]

    def tet(self, A_: int, B: int, E: int, C: int, D: int, F: int) -> CycNum:
        """Tet[A B E; C D F] with faces (A,D,E), (B,C,E), (A,B,F), (C,D,F)."""
        key = (A_, B, E, C, D, F)
        if key in self._tet:
            return self._tet[key]
        a = [(A_ + D + E) // 2, (B + C + E) // 2, (A_ + B + F) // 2, (C + D + F) // 2]
        b = [(B + D + E + F) // 2, (A_ + C + E + F) // 2, (A_ + B + C + D) // 2]
        lo, hi = max(a), min(b)
        inner = CycNum.from_int(self.p, 0)
        for s in range(lo, hi + 1):
            den = self.one
            for ai in a:
                den = den * self.qfact(s - ai)
            for bj in b:
                den = den * self.qfact(bj - s)
            term = self.qfact(s + 1) * self.inv(den)
            inner = inner + (-term if s % 2 else term)
        ifact = self.one
        for bj in b:
            for ai in a:
                ifact = ifact * self.qfact(bj - ai)
        efact = self.one
        for x in (A_, B, C, D, E, F):
            efact = efact * self.qfact(x)
        val = ifact * self.inv(efact) * inner
        self._tet[key] = val
        return val

    def sixj(self, a: int, b: int, i: int, c: int, d: int, j: int) -> CycNum:
        """Recoupling coefficient: the H-graph joining (a,b) and (c,d) by j expands
        as the sum over i of this times the graph joining (a,d) and (b,c) by i."""
        key = (a, b, i, c, d, j)
        if key not in self._sixj:
            val = (self.tet(a, b, i, c, d, j) * self.delta(i)
                   * self.inv(self.theta(a, d, i) * self.theta(b, c, i)))
            self._sixj[key] = val
        return self._sixj[key]

    def gauss_sum(self) -> CycNum:
        """sum_k (k/p) zeta^k with zeta = A^2; squares to (-1)^((p-1)/2) p."""
        p = self.p
        acc = CycNum.from_int(p, 0)
        for k in range(1, p):
            leg = pow(k, (p - 1) // 2, p)
            z = self.apow(2 * k)
            acc = acc + (z if leg == 1 else -z)
        return acc
