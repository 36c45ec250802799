"""Reductions of quantum representations modulo primes and finite-group exploration.

Elements of F_{q^f} are embedded as f x f multiplication matrices over F_q, so
every reduced n x n matrix becomes an nf x nf integer matrix and the closure
search runs on numpy arrays.  Group elements are hashed by their canonical
little-endian byte encoding; in projective mode each element is first scaled
so that its first nonzero entry (reading order, over F_{q^f}) equals 1.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

import numpy as np
import sympy

from . import linalg as la
from .cyclo import CycNum, ResidueField, complex_embed, is_prime
from .rep import Bundle, isometry_inverse, loop_operator, parse_word

DEFAULT_CAP = 10**7


class BadPrimeError(ValueError):
    pass


class Undecided(Exception):
    pass


# reduction ---------------------------------------------------------------------

@dataclass
class ResidueRep:
    q: int
    f: int
    n: int
    mats: dict[str, tuple]  # name -> n x n tuple of field elements (tuples of f ints)
    field: ResidueField | None = None
    weights: tuple | None = None
    provenance: str = ""
    modulus: tuple[int, ...] | None = None

    @classmethod
    def from_integer_matrices(cls, q: int, mats: dict[str, Sequence[Sequence[int]]],
                              provenance: str = "raw") -> ResidueRep:
        if not is_prime(q):
            raise BadPrimeError(f"{q} is not prime")
        out = {name: tuple(tuple((int(x) % q,) for x in row) for row in M)
               for name, M in mats.items()}
        n = len(next(iter(out.values())))
        return cls(q, 1, n, out, None, None, provenance)

    def _mult_block(self, a) -> np.ndarray:
        """Matrix of multiplication by a on F_q^f (columns are images of x^k)."""
        f = self.f
        if f == 1:
            return np.array([[a[0]]], dtype=np.int64)
        cols = []
        basis = [tuple(1 if i == k else 0 for i in range(f)) for k in range(f)]
        for e in basis:
            cols.append(self.field.mul(a, e))
        return np.array(cols, dtype=np.int64).T

    def array(self, name: str) -> np.ndarray:
        M = self.mats[name]
        n, f = self.n, self.f
        out = np.zeros((n * f, n * f), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                out[i * f:(i + 1) * f, j * f:(j + 1) * f] = self._mult_block(M[i][j])
        return out

    def serialize(self) -> str:
        lines = [f"# residue-rep q={self.q} f={self.f} n={self.n}",
                 f"# modulus={','.join(map(str, self.modulus)) if self.modulus else '-'}",
                 f"# provenance={self.provenance}"]
        for name in sorted(self.mats):
            lines.append(f"matrix {name}")
            for row in self.mats[name]:
                lines.append("\t".join(",".join(map(str, x)) for x in row))
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str, field: ResidueField | None = None) -> ResidueRep:
        lines = text.splitlines()
        head = dict(kv.split("=", 1) for kv in lines[0][2:].split()[1:])
        q, f, n = int(head["q"]), int(head["f"]), int(head["n"])
        mod_text = lines[1].partition("=")[2]
        modulus = None if mod_text == "-" else tuple(int(c) for c in mod_text.split(","))
        prov = lines[2].partition("=")[2]
        mats: dict[str, tuple] = {}
        i = 3
        while i < len(lines):
            name = lines[i].split(" ", 1)[1]
            rows = [tuple(tuple(int(c) for c in cell.split(",")) for cell in lines[i + 1 + r].split("\t"))
                    for r in range(n)]
            mats[name] = tuple(rows)
            i += n + 1
        return cls(q, f, n, mats, field, None, prov, modulus)


def _check_prime(p: int, q: int) -> None:
    if not is_prime(q):
        raise BadPrimeError(f"q={q} is not prime")
    if (2 * p) % q == 0:
        raise BadPrimeError(f"q={q} divides 2p={2 * p}")


def reduce_matrix(M: la.Matrix, F: ResidueField) -> tuple:
    try:
        return tuple(tuple(F.reduce(x) for x in row) for row in M)
    except ArithmeticError as exc:
        raise BadPrimeError(str(exc)) from None


def reduce_rep(bundle: Bundle, q: int, index: int = 0,
               names: Iterable[str] | None = None) -> ResidueRep:
    """Reduce the named matrices of a bundle (and its loop operators, as 'push:<loop>')."""
    p = bundle.p
    _check_prime(p, q)
    F = ResidueField(p, q, index)
    exact = bundle.named()
    for loop in bundle.loops:
        exact[f"push:{loop}"] = loop_operator(bundle, loop)
    if names is not None:
        exact = {k: exact[k] for k in names}
    mats = {k: reduce_matrix(M, F) for k, M in exact.items()}
    try:
        weights = tuple(F.reduce(w) for w in bundle.space.weights)
    except ArithmeticError as exc:
        raise BadPrimeError(str(exc)) from None
    return ResidueRep(q, F.f, bundle.space.dim, mats, F, weights,
                      f"{bundle.spec.name} p={p} t={bundle.t} q={q} index={index}", F.modulus)


def _fmatmul(F: ResidueField, X, Y):
    n, m, k = len(X), len(Y[0]), len(Y)
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = F.zero()
            for r in range(k):
                acc = F.add(acc, F.mul(X[i][r], Y[r][j]))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def homomorphism_check(bundle: Bundle, R: ResidueRep, pairs: Sequence[tuple[str, str]]) -> bool:
    """reduce(M N) == reduce(M) reduce(N) for the given name pairs."""
    exact = bundle.named()
    for a, b in pairs:
        lhs = reduce_matrix(la.matmul(exact[a], exact[b]), R.field)
        if lhs != _fmatmul(R.field, R.mats[a], R.mats[b]):
            return False
    return True


def hermitian_check(bundle: Bundle, R: ResidueRep) -> bool:
    """reduce(conj M)^T H reduce(M) == H over the residue field, for every named matrix."""
    F = R.field
    H = tuple(tuple(R.weights[i] if i == j else F.zero() for j in range(R.n)) for i in range(R.n))
    for name, M in bundle.named().items():
        Mc = reduce_matrix(la.conj(M), F)
        Mct = tuple(zip(*Mc))
        if _fmatmul(F, _fmatmul(F, Mct, H), R.mats[name]) != H:
            return False
    return True


# closure -------------------------------------------------------------------------

@dataclass
class ClosureResult:
    status: str  # "complete" or "cap-exceeded"
    visited: int
    order: int | None
    generators: tuple[str, ...]
    projective: bool
    seconds: float = 0.0
    keys: frozenset | None = field(default=None, repr=False)
    elements: np.ndarray | None = field(default=None, repr=False)

    @property
    def complete(self) -> bool:
        return self.status == "complete"

    def order_text(self) -> str:
        return str(self.order) if self.complete else "undecided"


def gl_order(n: int, q: int) -> int:
    out = 1
    for i in range(n):
        out *= q**n - q**i
    return out


class _Normalizer:
    """Projective normalization on embedded matrices (scale first nonzero entry to 1)."""

    def __init__(self, R: ResidueRep):
        self.q, self.f, self.n = R.q, R.f, R.n
        q, f = self.q, self.f
        size = q**f
        if size > 1 << 20:
            raise ValueError("projective mode needs q^f <= 2^20")
        self.weights = np.array([q**k for k in range(f)], dtype=np.int64)
        if f == 1:
            self.inv = np.array([0] + [pow(x, -1, q) for x in range(1, q)], dtype=np.int64)
        else:
            F = R.field
            table = np.zeros((size, f, f), dtype=np.int64)
            for code in range(1, size):
                a = tuple((code // q**k) % q for k in range(f))
                table[code] = R._mult_block(F.inv(a))
            self.inv = table

    def __call__(self, X: np.ndarray) -> np.ndarray:
        N = X.shape[0]
        n, f, q = self.n, self.f, self.q
        if f == 1:
            flat = X.reshape(N, -1)
            lead = flat[np.arange(N), (flat != 0).argmax(axis=1)]
            return (flat * self.inv[lead][:, None] % q).reshape(X.shape)
        # first column of each f x f block holds that entry's coefficients
        blocks = X.reshape(N, n, f, n, f)[:, :, :, :, 0]  # (N, i, coeff, j)
        codes = np.einsum("nicj,c->nij", blocks, self.weights).reshape(N, -1)
        lead = codes[np.arange(N), (codes != 0).argmax(axis=1)]
        S = self.inv[lead]  # (N, f, f)
        Y = np.einsum("niajc,ncb->niajb", X.reshape(N, n, f, n, f), S) % q
        return Y.reshape(X.shape)


def _dtype_for(q: int) -> str:
    return "<u1" if q < 256 else "<u2" if q < 65536 else "<u4"


def _keys(X: np.ndarray, q: int, n: int, f: int) -> list[bytes]:
    """Canonical keys: residue coefficients of the n x n entries in reading order."""
    if f > 1:
        X = X.reshape(X.shape[0], n, f, n, f)[:, :, :, :, 0].transpose(0, 1, 3, 2)
    Y = np.ascontiguousarray(X.astype(_dtype_for(q))).reshape(X.shape[0], -1)
    return Y.view(np.dtype((np.void, Y.shape[1] * Y.itemsize))).ravel().tolist()


CHUNK = 1 << 16


def _closure(arrays: list[np.ndarray], q: int, n: int, f: int, cap: int, norm,
             keep_elements: bool):
    k = arrays[0].shape[0]
    store = _dtype_for(q)
    start = np.eye(k, dtype=np.int64)[None]
    if norm is not None:
        start = norm(start)
    seen = set(_keys(start, q, n, f))
    stored = [start.astype(store)] if keep_elements else []
    frontier = start.astype(store)
    while frontier.shape[0]:
        fresh = []
        for lo in range(0, frontier.shape[0], CHUNK):
            chunk = frontier[lo:lo + CHUNK].astype(np.int64)
            for g in arrays:
                prod_ = np.matmul(chunk, g) % q
                if norm is not None:
                    prod_ = norm(prod_)
                new_idx = []
                for i, key in enumerate(_keys(prod_, q, n, f)):
                    if key not in seen:
                        seen.add(key)
                        new_idx.append(i)
                if new_idx:
                    fresh.append(prod_[new_idx].astype(store))
                if len(seen) > cap:
                    return False, seen, None
        frontier = np.concatenate(fresh) if fresh else frontier[:0]
        if keep_elements and frontier.shape[0]:
            stored.append(frontier)
    return True, seen, (np.concatenate(stored) if keep_elements else None)


def closure(R: ResidueRep, names: Sequence[str], cap: int = DEFAULT_CAP,
            projective: bool = False, keep_elements: bool = False) -> ClosureResult:
    """Breadth-first closure of the group generated by the named matrices."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    t0 = time.perf_counter()
    arrays = [R.array(nm) for nm in names]
    norm = _Normalizer(R) if projective else None
    ok, seen, elems = _closure(arrays, R.q, R.n, R.f, cap, norm, keep_elements)
    dt = time.perf_counter() - t0
    if not ok:
        return ClosureResult("cap-exceeded", len(seen), None, tuple(names), projective, dt)
    return ClosureResult("complete", len(seen), len(seen), tuple(names), projective, dt,
                         frozenset(seen), elems)


def same_subgroup(R: ResidueRep, gens_a: Sequence[str], gens_b: Sequence[str],
                  cap: int = DEFAULT_CAP, projective: bool = False) -> str:
    """'true' / 'false' / 'undecided' for equality of the generated subgroups."""
    return compare_subgroups(R, gens_a, gens_b, cap, projective).verdict


def _inverse_mod(M: np.ndarray, q: int) -> np.ndarray:
    inv = sympy.Matrix(M.tolist()).inv_mod(q)
    return np.array(inv.tolist(), dtype=np.int64)


def normality_check(R: ResidueRep, normal_gens: Sequence[str], ambient_gens: Sequence[str],
                    cap: int = DEFAULT_CAP, projective: bool = False) -> str:
    """'true' iff g N g^-1 lies in N for every ambient generator g."""
    N = closure(R, normal_gens, cap, projective, keep_elements=True)
    if not N.complete:
        return _normality_by_membership(R, normal_gens, ambient_gens, min(cap, 1 << 20),
                                        projective)
    norm = _Normalizer(R) if projective else None
    for name in ambient_gens:
        g = R.array(name)
        gi = _inverse_mod(g, R.q)
        for lo in range(0, N.elements.shape[0], CHUNK):
            chunk = N.elements[lo:lo + CHUNK].astype(np.int64)
            conj = np.matmul(np.matmul(g[None], chunk) % R.q, gi) % R.q
            if norm is not None:
                conj = norm(conj)
            if not set(_keys(conj, R.q, R.n, R.f)) <= N.keys:
                return "false"
    return "true"


# spectra ----------------------------------------------------------------------

@dataclass
class SpectrumReport:
    verdict: str  # "finite order" or "infinite order"
    order: int | None
    factors: list[str]
    cyclotomic: list[int]
    witness: dict

    def summary(self) -> str:
        if self.verdict == "finite order":
            return f"finite order {self.order}"
        kind = self.witness.get("kind")
        return f"infinite order ({kind})"


def _poly_mul(a: list[CycNum], b: list[CycNum]) -> list[CycNum]:
    z = CycNum.from_int(a[0].p, 0)
    out = [z] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return out


def norm_charpoly(M: la.Matrix) -> sympy.Poly:
    """Norm to Q of the characteristic polynomial: product of all Galois conjugates."""
    cp = la.charpoly(M)
    p = cp[0].p
    acc = cp
    for t in range(2, p):
        acc = _poly_mul(acc, [c.galois(t) for c in cp])
    x = sympy.Symbol("x")
    coeffs = []
    for c in acc:
        if not c.is_rational():
            raise ArithmeticError("norm polynomial has irrational coefficients")
        r = c.rational()
        coeffs.append(sympy.Rational(r.numerator, r.denominator))
    return sympy.Poly(coeffs, x, domain="QQ")


def _cyclotomic_index(P: sympy.Poly) -> int | None:
    if P.LC() != 1 or not P.is_cyclotomic:
        return None
    deg = P.degree()
    x = P.gen
    m = 1
    # phi(m) >= sqrt(m/2), so m <= 2 deg^2 suffices
    while m <= 2 * deg * deg + 2:
        if sympy.totient(m) == deg and sympy.Poly(sympy.cyclotomic_poly(m, x), x) == P:
            return m
        m += 1
    return None


def numeric_witness(M: la.Matrix, tol: float = 1e-9) -> dict | None:
    p = M[0][0].p
    for t in range(1, p):
        A = np.array([[complex_embed(x, t) for x in row] for row in M])
        mods = np.abs(np.linalg.eigvals(A))
        if mods.max() > 1 + tol:
            return {"kind": "embedding", "embedding": t, "modulus": float(mods.max())}
    return None


def spectrum_report(M: la.Matrix, max_power: int = 10**4) -> SpectrumReport:
    """Exact finite/infinite order decision with a witness for infinite order."""
    num = numeric_witness(M)
    P = norm_charpoly(M)
    _, facs = sympy.factor_list(P.as_expr(), P.gen)
    factors, indices, bad = [], [], []
    for fac, mult in facs:
        F = sympy.Poly(fac, P.gen)
        F = F.monic() if F.LC() < 0 and abs(F.LC()) == 1 else F
        s = str(F.as_expr())
        factors.append(f"({s})^{mult}")
        m = _cyclotomic_index(F)
        if m is None:
            bad.append(s)
        else:
            indices.append(m)
    if bad:
        w = {"kind": "non-cyclotomic factor", "factor": bad[0]}
        if num:
            w.update({"embedding": num["embedding"], "modulus": num["modulus"]})
        return SpectrumReport("infinite order", None, factors, sorted(set(indices)), w)
    k = 1
    for m in indices:
        k = math.lcm(k, m)
    if k > max_power:
        raise ArithmeticError(f"eigenvalue order {k} exceeds power bound")
    Mk = la.matpow(M, k)
    if la.scalar_of(Mk) != 1:
        return SpectrumReport("infinite order", None, factors, sorted(set(indices)),
                              {"kind": "unipotent part", "power": k})
    order = k
    for r in sympy.primefactors(k):
        while order % r == 0 and la.scalar_of(la.matpow(M, order // r)) == 1:
            order //= r
    return SpectrumReport("finite order", order, factors, sorted(set(indices)),
                          {"kind": "power", "power": order})


# word search --------------------------------------------------------------------

def words(letters: Sequence[str], max_len: int):
    """Freely reduced words in shortlex order; a capital letter is the inverse."""
    def cancels(u, v):
        return u != v and u.lower() == v.lower()

    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for c in letters:
                if w and cancels(w[-1], c):
                    continue
                nxt.append(w + (c,))
        yield from nxt
        frontier = nxt


@dataclass
class PushExploration:
    commutator: tuple[str, str] | None
    witness_word: str | None
    report: SpectrumReport | None
    searched: int


def push_explore(bundle: Bundle, max_len: int = 8) -> PushExploration:
    """Bounded search for a non-scalar commutator of loop operators and for a word
    of infinite order."""
    names = sorted(bundle.loops)
    ops = {}
    for nm in names:
        ops[nm] = loop_operator(bundle, nm)
        ops[nm.upper()] = loop_operator(bundle, nm, inverse=True)
    commutator = None
    for a, b in product(names, repeat=2):
        if a < b:
            ab = la.matmul(ops[a], ops[b])
            ba = la.matmul(ops[b], ops[a])
            if la.proportional(ab, ba) is None:
                commutator = (a, b)
                break
    letters = names + [n.upper() for n in names]
    cache: dict[tuple, la.Matrix] = {(): bundle.space.identity()}
    searched = 0
    for w in words(letters, max_len):
        M = la.matmul(cache[w[:-1]], ops[w[-1]])
        if len(w) < max_len:
            cache[w] = M
        searched += 1
        if numeric_witness(M) is None:
            continue
        rep = spectrum_report(M)
        if rep.verdict == "infinite order":
            return PushExploration(commutator, ".".join(w), rep, searched)
    return PushExploration(commutator, None, None, searched)


def word_matrix(bundle: Bundle, word: str) -> la.Matrix:
    from .rep import point_push

    return point_push(bundle, parse_word(word)).m


# membership certificates -------------------------------------------------------

@dataclass
class Ball:
    """Words of bounded length in a generating set (with inverses), BFS order."""
    keys: dict
    elements: np.ndarray
    parent: list[int]
    letter: list[int]
    letters: list[str]

    def word(self, i: int) -> list[str]:
        out = []
        while i:
            out.append(self.letters[self.letter[i]])
            i = self.parent[i]
        return out[::-1]


def _letter_arrays(R: ResidueRep, names: Sequence[str]):
    letters, arrays = [], []
    for nm in names:
        g = R.array(nm)
        letters += [nm, nm + "^-1"]
        arrays += [g, _inverse_mod(g, R.q)]
    return letters, arrays


def ball(R: ResidueRep, names: Sequence[str], size: int, projective: bool = False) -> Ball:
    letters, arrays = _letter_arrays(R, names)
    norm = _Normalizer(R) if projective else None
    k = arrays[0].shape[0]
    start = np.eye(k, dtype=np.int64)[None]
    if norm is not None:
        start = norm(start)
    keys = {_keys(start, R.q, R.n, R.f)[0]: 0}
    elems, parent, letter = [start], [0], [0]
    frontier, fidx = start, [0]
    while frontier.shape[0] and len(keys) < size:
        fresh, fresh_idx = [], []
        for li, g in enumerate(arrays):
            prod_ = np.matmul(frontier, g) % R.q
            if norm is not None:
                prod_ = norm(prod_)
            take = []
            for i, key in enumerate(_keys(prod_, R.q, R.n, R.f)):
                if key not in keys and len(keys) < size:
                    keys[key] = len(parent)
                    parent.append(fidx[i])
                    letter.append(li)
                    fresh_idx.append(len(parent) - 1)
                    take.append(i)
            if take:
                fresh.append(prod_[take])
        if not fresh:
            break
        frontier = np.concatenate(fresh)
        fidx = fresh_idx
        elems.append(frontier)
    return Ball(keys, np.concatenate(elems), parent, letter, letters)


def _invert_word(word: list[str]) -> list[str]:
    return [w[:-3] if w.endswith("^-1") else w + "^-1" for w in reversed(word)]


def find_word(R: ResidueRep, B: Ball, target: np.ndarray, projective: bool = False) -> list[str] | None:
    """A word w in the ball's letters with w = target (up to scalars if projective),
    via target h = h'  =>  target = h' h^-1."""
    norm = _Normalizer(R) if projective else None
    for lo in range(0, B.elements.shape[0], CHUNK):
        chunk = B.elements[lo:lo + CHUNK]
        prod_ = np.matmul(target[None], chunk) % R.q
        if norm is not None:
            prod_ = norm(prod_)
        for i, key in enumerate(_keys(prod_, R.q, R.n, R.f)):
            j = B.keys.get(key)
            if j is not None:
                return B.word(j) + _invert_word(B.word(lo + i))
    return None


def evaluate_word(R: ResidueRep, word: Sequence[str]) -> np.ndarray:
    k = R.n * R.f
    M = np.eye(k, dtype=np.int64)
    for w in word:
        g = R.array(w[:-3]) if w.endswith("^-1") else R.array(w)
        if w.endswith("^-1"):
            g = _inverse_mod(g, R.q)
        M = M @ g % R.q
    return M


def _same_up_to_scalar(R: ResidueRep, X: np.ndarray, Y: np.ndarray, projective: bool) -> bool:
    if not projective:
        return bool(np.array_equal(X % R.q, Y % R.q))
    norm = _Normalizer(R)
    return _keys(norm(X[None]), R.q, R.n, R.f) == _keys(norm(Y[None]), R.q, R.n, R.f)


def membership_certificate(R: ResidueRep, gens: Sequence[str], targets: dict[str, np.ndarray],
                           ball_size: int, projective: bool = False) -> dict[str, list[str]] | None:
    """Verified words in ``gens`` for each target matrix, or None if some target is not found."""
    B = ball(R, gens, ball_size, projective)
    out = {}
    for name, T in targets.items():
        w = find_word(R, B, T, projective)
        if w is None or not _same_up_to_scalar(R, evaluate_word(R, w), T, projective):
            return None
        out[name] = w
    return out


@dataclass
class SubgroupDecision:
    verdict: str  # "true", "false" or "undecided"
    method: str
    certificate: dict = field(default_factory=dict)

    def __str__(self):
        return self.verdict


def compare_subgroups(R: ResidueRep, gens_a: Sequence[str], gens_b: Sequence[str],
                      cap: int = DEFAULT_CAP, projective: bool = False,
                      ball_size: int = 1 << 20) -> SubgroupDecision:
    """Equality of <gens_a> and <gens_b>: by full closure when both fit under the cap,
    otherwise by verified mutual membership of generators (never a 'false' guess)."""
    A = closure(R, gens_a, cap, projective)
    if A.complete:
        B = closure(R, gens_b, cap, projective)
        if B.complete:
            return SubgroupDecision("true" if A.keys == B.keys else "false", "closure",
                                    {"order_a": A.order, "order_b": B.order})
    size = min(ball_size, cap)
    cert = {}
    for src, dst in ((gens_a, gens_b), (gens_b, gens_a)):
        need = {nm: R.array(nm) for nm in dst if nm not in src}
        if not need:
            continue
        found = membership_certificate(R, src, need, size, projective)
        if found is None:
            return SubgroupDecision("undecided", "membership")
        cert.update(found)
    return SubgroupDecision("true", "membership", cert)


def _normality_by_membership(R: ResidueRep, normal_gens: Sequence[str],
                             ambient_gens: Sequence[str], ball_size: int,
                             projective: bool) -> str:
    """Conjugates of the normal generators by ambient generators and their inverses,
    each expressed as a verified word in the normal generators; 'undecided' otherwise."""
    targets = {}
    for g in ambient_gens:
        G = R.array(g)
        Gi = _inverse_mod(G, R.q)
        for nm in normal_gens:
            X = R.array(nm)
            targets[f"{g}*{nm}*{g}^-1"] = G @ X % R.q @ Gi % R.q
            targets[f"{g}^-1*{nm}*{g}"] = Gi @ X % R.q @ G % R.q
    cert = membership_certificate(R, normal_gens, targets, ball_size, projective)
    return "true" if cert is not None else "undecided"
