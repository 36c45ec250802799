"""Quantum representations on spaces of conformal blocks, over Q(zeta_p).

A ``BlockSpace`` is the span of the admissible colorings of a graph, with the
diagonal Hermitian form whose weights are prod(theta at vertices) /
prod(Delta on internal edges).  Coordinates change between graphs by
recoupling (``flip``) and, on a one-holed torus piece, by the modular move
(``s_move``).  Matrices act on coordinate column vectors.

Named curves and loops per surface are fixed in ``CURVE_TABLES``; they are a
choice of this library, since only their construction (twists along annulus
boundaries) is canonical.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import linalg as la
from .blocks import ColoredGraph, colors, enumerate_colorings, _adm
from .cyclo import (CycNum, check_level, complex_embed, is_root_of_unity, make_root,
                    parse_cyc, serialize_cyc)
from .skein import Skein


class SpecError(ValueError):
    pass


CURVE_TABLES = {
    "OneHoledTorus": {
        "curves": {"a": "meridian, dual to the loop edge",
                   "b": "longitude, image of a under the modular move s",
                   "boundary": "boundary-parallel curve"},
        "generators": ["a", "b"],
        "loops": {},
    },
    "TwiceHoledTorus": {
        "curves": {"x+": "meridian dual to edge x1 of the circle graph",
                   "x-": "meridian dual to edge x2; x+ and x- cobound a pair of pants with the point",
                   "y+": "image of x+ under the modular move on the handle",
                   "y-": "image of x- under the same move",
                   "d+": "curve enclosing the second boundary and the point (lollipop stem)",
                   "d-": "curve parallel to the second boundary (label i)",
                   "point": "curve parallel to the point boundary (label j)"},
        "generators": ["x+", "x-", "y+", "y-", "d+"],
        "loops": {"x": ("x+", "x-"), "y": ("y+", "y-"), "d": ("d+", "d-")},
    },
    "HoledSphere": {
        "curves": {"s<m>": "half twist exchanging legs m-1 and m (equal colors)",
                   "t<m>": "curve enclosing legs m-1 and m"},
        "generators": ["s<m> or t<m> for m = 1..n-2"],
        "loops": {},
    },
    "Genus2Closed": {
        "curves": {"a1": "meridian of handle 1", "b1": "longitude of handle 1",
                   "c": "chain curve meeting b1 and b2 once",
                   "b2": "longitude of handle 2", "a2": "meridian of handle 2"},
        "generators": ["a1", "b1", "c", "b2", "a2"],
        "loops": {},
    },
    "Genus2OnePoint": {
        "curves": {"a1": "meridian of handle 1", "b1": "longitude of handle 1",
                   "c": "chain curve meeting b1 and b2 once",
                   "b2": "longitude of handle 2", "a2": "meridian of handle 2",
                   "a1'": "meridian of handle 1 enclosing the point",
                   "a2'": "meridian of handle 2 enclosing the point",
                   "b1'": "image of a1' under the modular move on handle 1",
                   "b2'": "image of a2' under the modular move on handle 2",
                   "point": "curve parallel to the point boundary"},
        "generators": ["a1", "b1", "c", "b2", "a2"],
        "loops": {"a1": ("a1'", "a1"), "b1": ("b1'", "b1"),
                  "a2": ("a2'", "a2"), "b2": ("b2'", "b2")},
    },
}


# spaces -----------------------------------------------------------------------

class BlockSpace:
    def __init__(self, graph: ColoredGraph, skein: Skein, name: str = ""):
        self.graph = graph
        self.skein = skein
        self.p = skein.p
        self.A = skein.A
        self.name = name or graph.name
        self.basis = enumerate_colorings(graph, self.p)
        if not self.basis:
            raise SpecError(f"space {self.name!r} is zero-dimensional at p={self.p}")
        self.index = {b: i for i, b in enumerate(self.basis)}
        self._pos = {e: i for i, e in enumerate(graph.edges)}
        self.weights = [self._weight(b) for b in self.basis]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def color(self, b: tuple[int, ...], name: str) -> int:
        if name in self._pos:
            return b[self._pos[name]]
        return self.graph.legs[name]

    def _weight(self, b) -> CycNum:
        sk = self.skein
        num = sk.one
        for v in self.graph.vertices:
            num = num * sk.theta(*(self.color(b, h) for h in v))
        den = sk.one
        for e in self.graph.edges:
            den = den * sk.delta(self.color(b, e))
        return num * sk.inv(den)

    def hermitian_form(self) -> list[CycNum]:
        return list(self.weights)

    def identity(self) -> la.Matrix:
        return la.identity(self.p, self.dim)


def hermitian_form(space: BlockSpace) -> list[CycNum]:
    return space.hermitian_form()


def twist_matrix(space: BlockSpace, edge: str) -> la.Matrix:
    """Dehn twist along the curve dual to an edge (or parallel to a leg)."""
    if edge not in space.graph.edges and edge not in space.graph.legs:
        raise SpecError(f"curve dual to {edge!r} not recognized in {space.name}")
    sk = space.skein
    return la.diag([sk.twist(space.color(b, edge)) for b in space.basis])


def isometry_inverse(M: la.Matrix, src: BlockSpace, tgt: BlockSpace) -> la.Matrix:
    """Inverse of an isometry src -> tgt: H_src^-1 M^dagger H_tgt."""
    D = la.dagger(M)
    sk = src.skein
    return tuple(tuple(sk.inv(src.weights[i]) * D[i][k] * tgt.weights[k]
                       for k in range(tgt.dim)) for i in range(src.dim))


def flip(space: BlockSpace, edge: str, a: str, b: str, c: str, d: str,
         new_edge: str) -> tuple[BlockSpace, la.Matrix]:
    """Recoupling move on ``edge`` joining vertex (a, b, edge) to vertex (c, d, edge).

    The new edge joins (a, d) to (b, c).  Returns the target space and the
    coordinate change F with y = F x.
    """
    G = space.graph
    vs = [i for i, v in enumerate(G.vertices) if edge in v]
    if len(vs) != 2 or edge not in G.edges:
        raise SpecError(f"edge {edge!r} is not a flippable internal edge")

    def rest(v):
        lst = list(v)
        lst.remove(edge)
        return sorted(lst)

    v1, v2 = G.vertices[vs[0]], G.vertices[vs[1]]
    if rest(v1) == sorted([a, b]) and rest(v2) == sorted([c, d]):
        pass
    elif rest(v2) == sorted([a, b]) and rest(v1) == sorted([c, d]):
        pass
    else:
        raise SpecError(f"illegal flip site around {edge!r}")
    new_vertices = [v for i, v in enumerate(G.vertices) if i not in vs]
    new_vertices += [(a, d, new_edge), (b, c, new_edge)]
    new_edges = [new_edge if e == edge else e for e in G.edges]
    target_graph = ColoredGraph(new_edges, new_vertices, dict(G.legs), genus=G.genus,
                                name=f"{G.name}/{edge}->{new_edge}")
    target = BlockSpace(target_graph, space.skein)
    sk = space.skein
    z = CycNum.from_int(space.p, 0)
    rows = [[z] * space.dim for _ in range(target.dim)]
    k = space.graph.edges.index(edge)
    for j, bvec in enumerate(space.basis):
        ca, cb, cc, cd = (space.color(bvec, x) for x in (a, b, c, d))
        ce = bvec[k]
        for f in colors(space.p):
            tvec = bvec[:k] + (f,) + bvec[k + 1:]
            i = target.index.get(tvec)
            if i is None:
                continue
            rows[i][j] = sk.sixj(ca, cb, f, cc, cd, ce)
    return target, la.mat(rows)


def _hopf_arc(sk: Skein, a: int, b: int, e: int) -> CycNum:
    """Hopf link colored a, b joined by an arc colored e, evaluated by fusing the clasp."""
    p = sk.p
    total = CycNum.from_int(p, 0)
    for c in colors(p):
        if not _adm(a, b, c, p):
            continue
        tw = sk.twist(c) * sk.inv(sk.twist(a) * sk.twist(b))
        total = total + sk.delta(c) * sk.inv(sk.theta(a, b, c)) * tw * sk.tet(a, b, e, b, a, c)
    return total


def s_normalization(sk: Skein) -> CycNum:
    """eta = (A^2 - A^-2) / G, with G the quadratic Gauss sum in zeta = A^2."""
    return (sk.apow(2) - sk.apow(-2)) * sk.inv(sk.gauss_sum())


def s_move(space: BlockSpace, loop: str) -> la.Matrix:
    """Modular move on the one-holed torus piece formed by a loop edge."""
    G = space.graph
    if loop not in G.edges:
        raise SpecError(f"{loop!r} is not an edge")
    at = [v for v in G.vertices if list(v).count(loop) == 2]
    if len(at) != 1 and any(loop in v for v in G.vertices):
        raise SpecError(f"{loop!r} is not a one-holed-torus piece")
    if at:
        (v,) = at
        lst = list(v)
        lst.remove(loop)
        lst.remove(loop)
        stem = lst[0]
    else:
        stem = None  # free circle: closed torus
    sk = space.skein
    eta = s_normalization(sk)
    k = G.edges.index(loop)
    z = CycNum.from_int(space.p, 0)
    rows = [[z] * space.dim for _ in range(space.dim)]
    for j, bvec in enumerate(space.basis):
        e = space.color(bvec, stem) if stem else 0
        a = bvec[k]
        for c in colors(space.p):
            tvec = bvec[:k] + (c,) + bvec[k + 1:]
            i = space.index.get(tvec)
            if i is None:
                continue
            w_local = sk.theta(c, c, e) * sk.inv(sk.delta(c))
            rows[i][j] = eta * _hopf_arc(sk, a, c, e) * sk.inv(w_local)
    return la.mat(rows)


def f_move(space: BlockSpace, edge: str, a: str, b: str, c: str, d: str,
           new_edge: str) -> la.Matrix:
    return flip(space, edge, a, b, c, d, new_edge)[1]


# representation matrices ---------------------------------------------------------

@dataclass
class RepMatrix:
    space: BlockSpace
    m: la.Matrix
    provenance: str

    def __matmul__(self, other: RepMatrix) -> RepMatrix:
        return RepMatrix(self.space, la.matmul(self.m, other.m),
                         f"{self.provenance}*{other.provenance}")

    def inv(self) -> RepMatrix:
        return RepMatrix(self.space, isometry_inverse(self.m, self.space, self.space),
                         f"({self.provenance})^-1")

    def __pow__(self, n: int) -> RepMatrix:
        base = self if n >= 0 else self.inv()
        return RepMatrix(self.space, la.matpow(base.m, abs(n)), f"({self.provenance})^{n}")

    def is_unitary(self) -> bool:
        return la.is_isometry(self.m, self.space.weights, self.space.weights)

    def det(self) -> CycNum:
        return la.det(self.m)


def _conj_by(M: la.Matrix, F: la.Matrix, Finv: la.Matrix) -> la.Matrix:
    return la.mul_all(Finv, M, F)


@dataclass(frozen=True)
class SurfaceSpec:
    kind: str
    labels: tuple[int, ...] = ()

    @property
    def name(self) -> str:
        return f"{self.kind}({','.join(map(str, self.labels))})"


def OneHoledTorus(i: int) -> SurfaceSpec:
    return SurfaceSpec("OneHoledTorus", (i,))


def TwiceHoledTorus(i: int, j: int) -> SurfaceSpec:
    return SurfaceSpec("TwiceHoledTorus", (i, j))


def HoledSphere(labels: Sequence[int]) -> SurfaceSpec:
    return SurfaceSpec("HoledSphere", tuple(labels))


def Genus2Closed() -> SurfaceSpec:
    return SurfaceSpec("Genus2Closed", ())


def Genus2OnePoint(i: int) -> SurfaceSpec:
    return SurfaceSpec("Genus2OnePoint", (i,))


def parse_spec(text: str) -> SurfaceSpec:
    kind, _, rest = text.partition("(")
    rest = rest.rstrip(")")
    labels = tuple(int(x) for x in rest.split(",") if x.strip())
    if kind not in CURVE_TABLES:
        raise SpecError(f"unsupported surface {kind!r}")
    return SurfaceSpec(kind, labels)


@dataclass
class Bundle:
    """Representation data on one reference basis: curve twists, generators,
    point-pushing loop operators and auxiliary moves."""

    spec: SurfaceSpec
    p: int
    t: int
    space: BlockSpace
    curves: dict[str, la.Matrix] = field(default_factory=dict)
    generators: list[str] = field(default_factory=list)
    loops: dict[str, tuple[str, str]] = field(default_factory=dict)
    extra: dict[str, la.Matrix] = field(default_factory=dict)

    def matrix(self, name: str) -> RepMatrix:
        if name in self.curves:
            return RepMatrix(self.space, self.curves[name], name)
        if name in self.extra:
            return RepMatrix(self.space, self.extra[name], name)
        raise KeyError(name)

    def named(self) -> dict[str, la.Matrix]:
        out = dict(self.curves)
        out.update(self.extra)
        return out


def _root_for(p: int, t: int | None) -> tuple[CycNum, int]:
    from .cyclo import root_exponent_unitary

    if t is None:
        t = root_exponent_unitary(p)
    t %= p
    return make_root(p, t=t), t


def build(spec: SurfaceSpec, p: int, t: int | None = None) -> Bundle:
    """Build every named curve twist for ``spec`` at the root A = -zeta^(t(p+1)/2)."""
    check_level(p)
    A, t = _root_for(p, t)
    sk = Skein(A)
    builder = {
        "OneHoledTorus": _build_one_holed_torus,
        "TwiceHoledTorus": _build_twice_holed_torus,
        "HoledSphere": _build_holed_sphere,
        "Genus2Closed": _build_genus2,
        "Genus2OnePoint": _build_genus2,
    }.get(spec.kind)
    if builder is None:
        raise SpecError(f"unsupported spec {spec.kind!r}")
    for c in spec.labels:
        if c not in colors(p):
            raise SpecError(f"label {c} not in C_{p}")
    bundle = builder(spec, p, t, sk)
    return bundle


def _build_one_holed_torus(spec, p, t, sk) -> Bundle:
    (i,) = spec.labels
    G = ColoredGraph(["c"], [("c", "c", "i")], {"i": i}, genus=1, name="torus1")
    X = BlockSpace(G, sk)
    Ta = twist_matrix(X, "c")
    S = s_move(X, "c")
    Sinv = isometry_inverse(S, X, X)
    Tb = la.mul_all(S, Ta, Sinv)
    B = Bundle(spec, p, t, X, generators=["a", "b"])
    B.curves = {"a": Ta, "b": Tb, "boundary": twist_matrix(X, "i")}
    B.extra = {"s": S}
    return B


def _build_twice_holed_torus(spec, p, t, sk) -> Bundle:
    i, j = spec.labels
    G = ColoredGraph(["x1", "x2"], [("x1", "x2", "i"), ("x1", "x2", "j")],
                     {"i": i, "j": j}, genus=1, name="torus2")
    X = BlockSpace(G, sk)
    # circle graph -> lollipop (loop x1, stem f joining the two legs)
    L, F = flip(X, "x2", "x1", "i", "j", "x1", "f")
    Finv = isometry_inverse(F, X, L)
    S = s_move(L, "x1")
    Sinv = isometry_inverse(S, L, L)
    M = la.mul_all(Finv, S, F)
    Minv = la.mul_all(Finv, Sinv, F)
    Txp, Txm = twist_matrix(X, "x1"), twist_matrix(X, "x2")
    B = Bundle(spec, p, t, X, generators=list(CURVE_TABLES["TwiceHoledTorus"]["generators"]),
               loops=dict(CURVE_TABLES["TwiceHoledTorus"]["loops"]))
    B.curves = {
        "x+": Txp,
        "x-": Txm,
        "y+": la.mul_all(M, Txp, Minv),
        "y-": la.mul_all(M, Txm, Minv),
        "d+": _conj_by(twist_matrix(L, "f"), F, Finv),
        "d-": twist_matrix(X, "i"),
        "point": twist_matrix(X, "j"),
    }
    B.extra = {"s": M, "f": F}
    return B


def _comb_graph(labels: Sequence[int]) -> ColoredGraph:
    n = len(labels)
    if n < 3:
        raise SpecError("a holed sphere needs at least three boundary circles")
    legs = {f"l{k}": c for k, c in enumerate(labels)}
    edges = [f"e{k}" for k in range(1, n - 2)]
    if n == 3:
        vertices = [("l0", "l1", "l2")]
    else:
        vertices = [("l0", "l1", "e1")]
        for k in range(2, n - 2):
            vertices.append((f"e{k - 1}", f"l{k}", f"e{k}"))
        vertices.append((f"e{n - 3}", f"l{n - 2}", f"l{n - 1}"))
    return ColoredGraph(edges, vertices, legs, genus=0, name="comb")


def _pair_move(X: BlockSpace, m: int):
    """Coordinates where legs m-1 and m meet at a vertex, through the new edge 'f'."""
    n = len(X.graph.legs)
    if m == 1:
        return None
    left = "l0" if m == 2 else f"e{m - 2}"
    right = f"l{n - 1}" if m == n - 2 else f"e{m}"
    return flip(X, f"e{m - 1}", left, f"l{m - 1}", f"l{m}", right, "f")


def _build_holed_sphere(spec, p, t, sk) -> Bundle:
    labels = spec.labels
    n = len(labels)
    X = BlockSpace(_comb_graph(labels), sk)
    B = Bundle(spec, p, t, X)
    for m in range(1, n - 1):
        la_, lb = labels[m - 1], labels[m]
        moved = _pair_move(X, m)

        def local(space, fuse_name):
            half = [sk.half_twist(la_, lb, space.color(b, fuse_name)) for b in space.basis]
            full = [sk.twist(space.color(b, fuse_name)) for b in space.basis]
            return la.diag(half), la.diag(full)

        if moved is None:
            half, full = local(X, "e1" if n > 3 else "l2")
        else:
            Y, F = moved
            Finv = isometry_inverse(F, X, Y)
            h, f_ = local(Y, "f")
            half, full = _conj_by(h, F, Finv), _conj_by(f_, F, Finv)
        B.curves[f"t{m}"] = full
        if la_ == lb:
            B.curves[f"s{m}"] = half
            B.generators.append(f"s{m}")
        else:
            B.generators.append(f"t{m}")
    for k in range(n):
        B.curves[f"leg{k}"] = twist_matrix(X, f"l{k}")
    return B


def _build_genus2(spec, p, t, sk) -> Bundle:
    closed = spec.kind == "Genus2Closed"
    if closed:
        G = ColoredGraph(["c1", "c2", "h"], [("c1", "c1", "h"), ("c2", "c2", "h")],
                         {}, genus=2, name="dumbbell")
    else:
        (i,) = spec.labels
        G = ColoredGraph(["c1", "c2", "e1", "e2"],
                         [("c1", "c1", "e1"), ("c2", "c2", "e2"), ("e1", "e2", "P")],
                         {"P": i}, genus=2, name="lollipops")
    X = BlockSpace(G, sk)
    Ta1, Ta2 = twist_matrix(X, "c1"), twist_matrix(X, "c2")
    S1, S2 = s_move(X, "c1"), s_move(X, "c2")
    S1i, S2i = isometry_inverse(S1, X, X), isometry_inverse(S2, X, X)
    B = Bundle(spec, p, t, X, generators=["a1", "b1", "c", "b2", "a2"])
    B.curves = {"a1": Ta1, "a2": Ta2,
                "b1": la.mul_all(S1, Ta1, S1i), "b2": la.mul_all(S2, Ta2, S2i)}
    if closed:
        Y, F = flip(X, "h", "c1", "c1", "c2", "c2", "f")
        Fi = isometry_inverse(F, X, Y)
        B.curves["c"] = _conj_by(twist_matrix(Y, "f"), F, Fi)
    else:
        # handle 1 end fused with the point, then with one end of handle 2
        Y1, F1 = flip(X, "e1", "c1", "c1", "e2", "P", "g")
        F1i = isometry_inverse(F1, X, Y1)
        Y2, F2 = flip(Y1, "e2", "g", "c1", "c2", "c2", "f")
        F12 = la.matmul(F2, F1)
        F12i = la.matmul(F1i, isometry_inverse(F2, Y1, Y2))
        B.curves["c"] = _conj_by(twist_matrix(Y2, "f"), F12, F12i)
        a1p = _conj_by(twist_matrix(Y1, "g"), F1, F1i)
        Z1, G1 = flip(X, "e2", "c2", "c2", "P", "e1", "g")
        G1i = isometry_inverse(G1, X, Z1)
        a2p = _conj_by(twist_matrix(Z1, "g"), G1, G1i)
        B.curves.update({
            "a1'": a1p, "a2'": a2p,
            "b1'": la.mul_all(S1, a1p, S1i), "b2'": la.mul_all(S2, a2p, S2i),
            "point": twist_matrix(X, "P"),
            "e1": twist_matrix(X, "e1"), "e2": twist_matrix(X, "e2"),
        })
        B.loops = dict(CURVE_TABLES["Genus2OnePoint"]["loops"])
    B.extra = {"s1": S1, "s2": S2}
    return B


def mcg_generators(spec: SurfaceSpec, p: int, t: int | None = None) -> dict[str, RepMatrix]:
    B = build(spec, p, t)
    return {g: B.matrix(g) for g in B.generators}


# point pushing ----------------------------------------------------------------

def loop_operator(B: Bundle, name: str, inverse: bool = False) -> la.Matrix:
    """T_{gamma+} T_{gamma-}^-1 for a named simple based loop (both twists are
    commuting and H-unitary)."""
    if name not in B.loops:
        raise SpecError(f"unknown loop {name!r} on {B.spec.name}")
    plus, minus = B.loops[name]
    P, M = B.curves[plus], B.curves[minus]
    Pi = isometry_inverse(P, B.space, B.space)
    Mi = isometry_inverse(M, B.space, B.space)
    return la.matmul(Mi, P) if not inverse else la.matmul(M, Pi)


def parse_word(word: str) -> list[tuple[str, int]]:
    """'x y^-1 d^2' or 'x.Y.d' (capital = inverse) into (name, power) pairs."""
    out = []
    for tok in word.replace(".", " ").split():
        if "^" in tok:
            name, _, e = tok.partition("^")
            out.append((name, int(e)))
        elif tok[0].isupper() and tok.lower() != tok:
            out.append((tok.lower(), -1))
        else:
            out.append((tok, 1))
    return out


def point_push(B: Bundle, word: str | Sequence[tuple[str, int]]) -> RepMatrix:
    letters = parse_word(word) if isinstance(word, str) else list(word)
    M = B.space.identity()
    cache: dict[tuple[str, bool], la.Matrix] = {}
    for name, e in letters:
        key = (name, e < 0)
        if key not in cache:
            cache[key] = loop_operator(B, name, inverse=e < 0)
        for _ in range(abs(e)):
            M = la.matmul(M, cache[key])
    label = word if isinstance(word, str) else " ".join(f"{n}^{e}" for n, e in letters)
    return RepMatrix(B.space, M, f"push[{label}]")


# Burau blocks ---------------------------------------------------------------------

@dataclass
class BurauBlock:
    bundle: Bundle
    k: int
    a: int
    parameter_order: int
    expect_infinite_b3: bool
    eigen_ratio: CycNum | None


def burau_block(k: int, a: int, p: int, t: int | None = None) -> BurauBlock:
    """Braid group B_k on the holed sphere colored (a, ..., a, ak-2)."""
    if k < 2:
        raise SpecError("k >= 2")
    top = a * k - 2
    if top not in colors(p) or a not in colors(p):
        raise SpecError(f"colors (a={a}, ak-2={top}) not in C_{p}")
    spec = HoledSphere([a] * k + [top])
    B = build(spec, p, t)
    sk = Skein(B.space.A)
    # sigma_1 is diagonal; its two eigenvalues are -u and A^(2a^2) u for a unit u
    s1 = B.curves["s1"]
    distinct = []
    for i in range(B.space.dim):
        if s1[i][i] not in distinct:
            distinct.append(s1[i][i])
    if len(distinct) > 2:
        raise SpecError("sigma_1 has more than two eigenvalues")
    ratio = distinct[0] * sk.inv(distinct[1]) if len(distinct) == 2 else None
    order = is_root_of_unity(sk.apow(2 * a * a)).order
    # finiteness criterion for B_3 images: infinite unless the order is 2, 3, 4 or 5
    return BurauBlock(B, k, a, order, order not in (2, 3, 4, 5), ratio)


# checks ---------------------------------------------------------------------------

def relation_scalar(lhs: la.Matrix, rhs: la.Matrix):
    """Scalar s with lhs = s rhs and its root-of-unity verdict."""
    s = la.proportional(lhs, rhs)
    if s is None:
        return None, False
    return s, bool(is_root_of_unity(s))


def conj_symmetry_check(spec: SurfaceSpec, p: int, t: int | None = None) -> dict[str, bool]:
    B = build(spec, p, t)
    Bc = build(spec, p, -B.t)
    out = {}
    for name, M in B.named().items():
        out[name] = la.conj(M) == Bc.named()[name]
    return out


def galois_coherence(spec: SurfaceSpec, p: int, s: int, t: int | None = None) -> dict[str, bool]:
    B = build(spec, p, t)
    Bs = build(spec, p, (B.t * s) % p)
    return {name: la.galois(M, s) == Bs.named()[name] for name, M in B.named().items()}


def weights_positive(space: BlockSpace, embedding: int = 1) -> bool:
    return all(complex_embed(w, embedding).real > 0 for w in space.weights)


def supported_specs(p: int) -> list[SurfaceSpec]:
    """The desk-scale spec list used by checks and acceptance runs."""
    top = p - 3
    specs = [OneHoledTorus(0), OneHoledTorus(2), TwiceHoledTorus(2, top),
             HoledSphere([2, 2, 2, 4] if p >= 7 else [2, 2, 2, 2]),
             Genus2Closed(), Genus2OnePoint(2)]
    return specs


def pentagon_check(p: int, labels: Sequence[int] = (2, 2, 2, 2, 2), t: int | None = None) -> bool:
    """Two flip paths between the two combs of a 5-holed sphere give the same
    coordinate change, exactly."""
    A, _ = _root_for(p, t)
    sk = Skein(A)
    X = BlockSpace(_comb_graph(labels), sk)
    # path 1: ((01)2)3 -> (01)(23) -> 0(1(23))
    Y1, F1 = flip(X, "e2", "e1", "l2", "l3", "l4", "u")
    Y2, F2 = flip(Y1, "e1", "l0", "l1", "u", "l4", "v")
    P1 = la.matmul(F2, F1)
    # path 2: ((01)2)3 -> (0(12))3 -> 0((12)3) -> 0(1(23))
    Z1, G1 = flip(X, "e1", "l0", "l1", "l2", "e2", "x")
    Z2, G2 = flip(Z1, "e2", "l0", "x", "l3", "l4", "y")
    Z3, G3 = flip(Z2, "x", "l1", "l2", "l3", "y", "z")
    P2 = la.mul_all(G3, G2, G1)
    # Y2 has edges [v, u] and Z3 has [z, y] with v ~ y, u ~ z
    for i, b in enumerate(Y2.basis):
        r = Z3.index.get((b[1], b[0]))
        if r is None or P1[i] != P2[r]:
            return False
    return Y2.dim == Z3.dim


def modular_check(space_spec: SurfaceSpec, p: int, t: int | None = None) -> dict:
    """(S T)^3 = lambda S^2 with lambda a root of unity, and S^2 central among twists."""
    B = build(space_spec, p, t)
    S, T = B.extra["s"], B.curves["a"]
    S2 = la.matmul(S, S)
    ST = la.matmul(S, T)
    lam, ok = relation_scalar(la.matpow(ST, 3), S2)
    return {"lambda": lam, "lambda_root_of_unity": ok,
            "s2_commutes": la.matmul(S2, T) == la.matmul(T, S2)}


# relation tables ----------------------------------------------------------------

def relation_pairs(B: Bundle) -> tuple[list[tuple[str, str]], list[tuple[str, str]]]:
    """(braid pairs, commuting pairs) among the generators: curves meeting once and
    disjoint curves."""
    kind = B.spec.kind
    g = B.generators
    if kind == "OneHoledTorus":
        return [("a", "b")], []
    if kind == "TwiceHoledTorus":
        braid = [(u, v) for u in ("x+", "x-") for v in ("y+", "y-")]
        return braid, [("x+", "x-"), ("y+", "y-"), ("x+", "d+"), ("y+", "d+")]
    if kind == "HoledSphere":
        braid = [(g[m], g[m + 1]) for m in range(len(g) - 1)]
        comm = [(g[m], g[n]) for m in range(len(g)) for n in range(m + 2, len(g))]
        return braid, comm
    # Humphries chain a1 - b1 - c - b2 - a2
    braid = [(g[m], g[m + 1]) for m in range(len(g) - 1)]
    comm = [(g[m], g[n]) for m in range(len(g)) for n in range(m + 2, len(g))]
    return braid, comm


@dataclass
class CheckLine:
    name: str
    passed: bool
    detail: str = ""


def check_bundle(B: Bundle) -> list[CheckLine]:
    """Hermitian invariance, determinants, twist eigenvalues, relations, and p-th powers
    of loop operators."""
    out = []
    W = B.space.weights
    sk = Skein(B.space.A)
    for name, M in sorted(B.named().items()):
        out.append(CheckLine(f"hermitian:{name}", la.is_isometry(M, W, W)))
        d = la.det(M)
        r = is_root_of_unity(d)
        out.append(CheckLine(f"det-root-of-unity:{name}", bool(r), f"order={r.order}"))
    for e in B.space.graph.edges:
        T = twist_matrix(B.space, e)
        ok = all(T[i][i] == sk.twist(B.space.color(b, e)) for i, b in enumerate(B.space.basis))
        out.append(CheckLine(f"twist-eigenvalues:{e}", ok))
    braid, comm = relation_pairs(B)
    for u, v in braid:
        a, b = B.curves[u], B.curves[v]
        s, ok = relation_scalar(la.mul_all(a, b, a), la.mul_all(b, a, b))
        out.append(CheckLine(f"braid:{u},{v}", ok, "scalar=1" if s == 1 else "scalar root of unity"))
    for u, v in comm:
        a, b = B.curves[u], B.curves[v]
        s, ok = relation_scalar(la.matmul(a, b), la.matmul(b, a))
        out.append(CheckLine(f"commute:{u},{v}", ok))
    for loop in sorted(B.loops):
        P = la.matpow(loop_operator(B, loop), B.p)
        out.append(CheckLine(f"push-power-p:{loop}", la.scalar_of(P) == 1))
    return out


# bundle files -------------------------------------------------------------------

class BundleFormatError(ValueError):
    def __init__(self, msg: str, offset: int):
        super().__init__(f"{msg} (byte offset {offset})")
        self.offset = offset


@dataclass
class BundleFile:
    p: int
    t: int
    spec: str
    edges: list[str]
    basis: list[tuple[int, ...]]
    weights: list[CycNum]
    generators: list[str]
    loops: dict[str, tuple[str, str]]
    matrices: dict[str, la.Matrix]

    @classmethod
    def from_bundle(cls, B: Bundle) -> BundleFile:
        return cls(B.p, B.t, B.spec.name, list(B.space.graph.edges), list(B.space.basis),
                   list(B.space.weights), list(B.generators), dict(B.loops), B.named())

    def serialize(self) -> str:
        lines = ["# skein bundle v1", f"p={self.p}", f"t={self.t}", f"spec={self.spec}",
                 "edges=" + ",".join(self.edges),
                 "basis=" + ";".join(",".join(map(str, b)) for b in self.basis),
                 "generators=" + ",".join(self.generators),
                 "loops=" + ";".join(f"{k}:{v[0]}/{v[1]}" for k, v in sorted(self.loops.items())),
                 "weights\t" + "\t".join(serialize_cyc(w) for w in self.weights)]
        for name in sorted(self.matrices):
            lines.append(f"matrix\t{name}")
            for row in self.matrices[name]:
                lines.append("\t".join(serialize_cyc(x) for x in row))
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> BundleFile:
        lines = text.split("\n")
        offsets, pos = [], 0
        for ln in lines:
            offsets.append(pos)
            pos += len(ln.encode()) + 1

        def fail(i, msg):
            raise BundleFormatError(f"line {i + 1}: {msg}", offsets[min(i, len(offsets) - 1)])

        if not lines or lines[0] != "# skein bundle v1":
            fail(0, "missing bundle header")
        head = {}
        for i in range(1, 8):
            if i >= len(lines) or "=" not in lines[i]:
                fail(i, "malformed header field")
            k, _, v = lines[i].partition("=")
            head[k] = v
        try:
            p, t = int(head["p"]), int(head["t"])
            edges = head["edges"].split(",") if head["edges"] else []
            basis = [tuple(int(c) for c in b.split(",")) if b else () for b in head["basis"].split(";")]
            gens = head["generators"].split(",") if head["generators"] else []
            loops = {}
            if head["loops"]:
                for item in head["loops"].split(";"):
                    k, _, v = item.partition(":")
                    a, _, b = v.partition("/")
                    loops[k] = (a, b)
        except (KeyError, ValueError) as exc:
            fail(1, f"bad header: {exc}")
        n = len(basis)

        def cells(i, expect):
            parts = lines[i].split("\t")
            if len(parts) != expect:
                fail(i, f"expected {expect} fields")
            try:
                out = [parse_cyc(c) for c in parts[-n:]]
            except Exception as exc:  # noqa: BLE001
                fail(i, f"bad number: {exc}")
            if any(x.p != p for x in out):
                fail(i, "entry over another field")
            return out

        if len(lines) < 9 or not lines[8].startswith("weights\t"):
            fail(8, "missing weights")
        weights = cells(8, n + 1)
        mats = {}
        i = 9
        while i < len(lines) and lines[i] != "":
            if not lines[i].startswith("matrix\t"):
                fail(i, "expected a matrix block")
            name = lines[i].split("\t", 1)[1]
            rows = []
            for r in range(n):
                if i + 1 + r >= len(lines):
                    fail(i + r, "truncated matrix")
                rows.append(tuple(cells(i + 1 + r, n)))
            mats[name] = tuple(rows)
            i += n + 1
        if i != len(lines) - 1:
            fail(i, "trailing data")
        return cls(p, t, head["spec"], edges, basis, weights, gens, loops, mats)
