"""Trivalent colored graphs and dimensions of spaces of conformal blocks."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import mpmath

from .cyclo import is_prime


class GraphError(ValueError):
    pass


def colors(p: int) -> list[int]:
    return list(range(0, p - 2, 2))


def admissible(a: int, b: int, c: int, p: int) -> bool:
    for x in (a, b, c):
        if x < 0 or x > p - 3 or x % 2:
            raise ValueError(f"color {x} is not in C_{p}")
    return _adm(a, b, c, p)


def _adm(a: int, b: int, c: int, p: int) -> bool:
    return (a <= b + c and b <= a + c and c <= a + b
            and (a + b + c) % 2 == 0 and a + b + c <= 2 * (p - 2))


@dataclass
class ColoredGraph:
    """Uni-trivalent graph.  ``edges`` are internal edges to be colored; ``legs``
    are boundary edges with fixed colors.  Each vertex is a triple of edge or leg
    names (a loop edge appears twice).  Internal edges not used by any vertex are
    free circles."""

    edges: list[str]
    vertices: list[tuple[str, str, str]]
    legs: dict[str, int] = field(default_factory=dict)
    genus: int | None = None
    name: str = ""

    def __post_init__(self):
        names = set(self.edges)
        if len(names) != len(self.edges) or names & set(self.legs):
            raise GraphError("duplicate edge names")
        count = {e: 0 for e in list(self.edges) + list(self.legs)}
        for v in self.vertices:
            if len(v) != 3:
                raise GraphError(f"vertex {v} is not trivalent")
            for h in v:
                if h not in count:
                    raise GraphError(f"unknown edge {h!r} at vertex {v}")
                count[h] += 1
        for e in self.edges:
            if count[e] not in (0, 2):
                raise GraphError(f"internal edge {e!r} has {count[e]} ends on vertices")
        for leg in self.legs:
            if count[leg] != 1:
                raise GraphError(f"leg {leg!r} must end on exactly one vertex")
        if self.genus is not None and self.betti() != self.genus:
            raise GraphError(f"first Betti number {self.betti()} != genus {self.genus}")

    @property
    def r(self) -> int:
        return len(self.legs)

    def betti(self) -> int:
        parent = {}

        def find(x):
            while parent.setdefault(x, x) != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        nodes = set(range(len(self.vertices)))
        ends = {e: [] for e in self.edges}
        for i, v in enumerate(self.vertices):
            for h in v:
                if h in ends:
                    ends[h].append(i)
        free = 0
        for e, vs in ends.items():
            if not vs:
                free += 1
                continue
            a, b = find(vs[0]), find(vs[1])
            if a != b:
                parent[a] = b
        comps = len({find(n) for n in nodes})
        used = len(self.edges) - free
        return used - len(self.vertices) + comps + free

    def edge_index(self, name: str) -> int:
        return self.edges.index(name)


def standard_graph(g: int, labels: Sequence[int] = ()) -> ColoredGraph:
    """A fixed graph for genus g with legs colored by ``labels``: g lollipop handles
    and the legs attached along a comb-shaped spine."""
    labels = list(labels)
    r = len(labels)
    legs = {f"l{i}": c for i, c in enumerate(labels)}
    if g == 0 and r < 3:
        raise GraphError("genus 0 needs at least three legs for a trivalent graph")
    edges: list[str] = []
    vertices: list[tuple[str, str, str]] = []
    n = g + r
    stems = []
    for m in range(g):
        edges.append(f"c{m}")
        stems.append(f"h{m}")
    stems += list(legs)
    if n == 1:
        edges.clear()
        edges.append("c0")
        return ColoredGraph(edges, [], legs, genus=g, name=f"g{g}")
    if n == 2:
        # the two stems are a single edge
        if g == 2:
            edges.append("h0")
            vertices = [("c0", "c0", "h0"), ("c1", "c1", "h0")]
        else:  # g == 1, r == 1
            vertices = [("c0", "c0", "l0")]
        return ColoredGraph(edges, vertices, legs, genus=g, name=f"g{g}")
    for m in range(g):
        edges.append(f"h{m}")
        vertices.append((f"c{m}", f"c{m}", f"h{m}"))
    spine = [f"s{k}" for k in range(n - 3)]
    edges += spine
    if n == 3:
        vertices.append(tuple(stems))
    else:
        vertices.append((stems[0], stems[1], spine[0]))
        for k in range(1, n - 3):
            vertices.append((spine[k - 1], stems[k + 1], spine[k]))
        vertices.append((spine[-1], stems[-2], stems[-1]))
    return ColoredGraph(edges, vertices, legs, genus=g, name=f"g{g}")


def _search_order(G: ColoredGraph):
    """Edge order plus, per position, the vertices completed at that step."""
    order = list(G.edges)
    pos = {e: i for i, e in enumerate(order)}
    done_at: list[list[tuple[str, str, str]]] = [[] for _ in order]
    leg_only = []
    for v in G.vertices:
        idx = [pos[h] for h in v if h in pos]
        if idx:
            done_at[max(idx)].append(v)
        else:
            leg_only.append(v)
    return order, pos, done_at, leg_only


def enumerate_colorings(G: ColoredGraph, p: int) -> list[tuple[int, ...]]:
    """All p-admissible colorings, lexicographic in the graph's edge order."""
    order, pos, done_at, leg_only = _search_order(G)
    cs = colors(p)
    for v in leg_only:
        if not _adm(*(G.legs[h] for h in v), p):
            return []
    for c in G.legs.values():
        if c not in cs:
            raise ValueError(f"leg color {c} not in C_{p}")
    out: list[tuple[int, ...]] = []
    current = [0] * len(order)

    def color_of(h):
        return current[pos[h]] if h in pos else G.legs[h]

    def rec(i):
        if i == len(order):
            out.append(tuple(current))
            return
        for c in cs:
            current[i] = c
            if all(_adm(color_of(a), color_of(b), color_of(d), p) for a, b, d in done_at[i]):
                rec(i + 1)

    rec(0)
    return out


def count_colorings(G: ColoredGraph, p: int) -> int:
    """Number of admissible colorings, by memoized search on the open frontier."""
    order, pos, done_at, leg_only = _search_order(G)
    cs = colors(p)
    for v in leg_only:
        if not _adm(*(G.legs[h] for h in v), p):
            return 0
    # edges still needed after step i
    last_use = {}
    for i, vs in enumerate(done_at):
        for v in vs:
            for h in v:
                if h in pos:
                    last_use[h] = i
    frontier_after = []
    for i in range(len(order)):
        frontier_after.append(tuple(e for e in order[: i + 1] if last_use.get(e, -1) > i))

    @lru_cache(maxsize=None)
    def rec(i, state):
        if i == len(order):
            return 1
        assigned = dict(state)
        total = 0
        for c in cs:
            assigned[order[i]] = c

            def col(h):
                return assigned[h] if h in pos else G.legs[h]

            if all(_adm(col(a), col(b), col(d), p) for a, b, d in done_at[i]):
                nxt = tuple((e, assigned[e]) for e in frontier_after[i])
                total += rec(i + 1, nxt)
        return total

    n = rec(0, ())
    rec.cache_clear()
    return n


# dimension engines ---------------------------------------------------------------

def genus1_two(p: int, i: int, j: int) -> int:
    return (p - 1 - max(i, j)) * (min(i, j) + 1) // 2


def _fuse(p: int, i: int, j: int) -> list[int]:
    return [t for t in colors(p) if _adm(i, j, t, p)]


def _next_genus(p: int, D: list[int]) -> list[int]:
    """dim W_{g+1,(k)} = sum_j D(j) dim W_{1,(j,k)} for every k, via prefix sums."""
    cs = colors(p)
    n = len(cs)
    pre = [0] * (n + 1)  # sum_{j <= k} D(j)(j+1)
    for idx, j in enumerate(cs):
        pre[idx + 1] = pre[idx] + D[idx] * (j + 1)
    suf = [0] * (n + 1)  # sum_{j > k} D(j)(p-1-j)
    for idx in range(n - 1, -1, -1):
        suf[idx] = suf[idx + 1] + D[idx] * (p - 1 - cs[idx])
    out = []
    for idx, k in enumerate(cs):
        s = (p - 1 - k) * pre[idx + 1] + (k + 1) * suf[idx + 1]
        out.append(s // 2)
    return out


@lru_cache(maxsize=None)
def single_label_table(g: int, p: int) -> tuple[int, ...]:
    """(dim W_{g,(k)} for k in C_p), g >= 1, seeded by the genus-one formula."""
    if g < 1:
        raise ValueError("g >= 1")
    if g == 1:
        return tuple(genus1_two(p, 0, k) for k in colors(p))
    return tuple(_next_genus(p, list(single_label_table(g - 1, p))))


def dim_recursive(g: int, p: int, labels: Sequence[int] = ()) -> int:
    """Authoritative dimension: fuse the labels to one total color, then apply the
    genus recursion."""
    labels = [c for c in labels if c != 0]
    cs = set(colors(p))
    for c in labels:
        if c not in cs:
            raise ValueError(f"label {c} not in C_{p}")
    # multiplicity of each total color after fusing the labels left to right
    mult = {0: 1}
    for c in labels:
        nxt: dict[int, int] = {}
        for t, m in mult.items():
            for u in _fuse(p, t, c):
                nxt[u] = nxt.get(u, 0) + m
        mult = nxt
    if g == 0:
        return mult.get(0, 0)
    table = single_label_table(g, p)
    return sum(m * table[t // 2] for t, m in mult.items())


def dim_enumerated(g: int, p: int, labels: Sequence[int] = ()) -> int:
    """Count of admissible colorings of the standard graph (independent of the
    recursion)."""
    labels = list(labels)
    if g == 0 and len(labels) < 3:
        if not labels:
            return 1
        if len(labels) == 1:
            return int(labels[0] == 0)
        return int(labels[0] == labels[1])
    return count_colorings(standard_graph(g, labels), p)


def verlinde_dim(g: int, p: int, labels: Sequence[int] = (), dps: int = 50,
                 guard: float = 1e-6) -> int:
    """Trigonometric Verlinde sum evaluated at ``dps`` digits, rounded under a guard."""
    labels = list(labels)
    with mpmath.workdps(dps):
        total = mpmath.mpf(0)
        for s in range(1, (p - 1) // 2 + 1):
            x = mpmath.pi * s / p
            term = mpmath.sin(x) ** (2 - 2 * g - len(labels))
            for k in labels:
                term *= mpmath.sin((k + 1) * x)
            total += term
        value = (mpmath.mpf(p) / 4) ** (g - 1) * total
        n = int(mpmath.nint(value))
        scale = max(1, abs(n))
        if abs(value - n) > guard * scale:
            raise ArithmeticError(
                f"Verlinde sum {mpmath.nstr(value, 20)} is not within guard of an integer")
    return n


def dim_closed_form(kind: str, p: int, *args: int) -> Fraction:
    if kind == "genus1":
        i, j = args
        return Fraction((p - 1 - max(i, j)) * (min(i, j) + 1), 2)
    if kind == "genus2_top":
        return Fraction(p ** 3 - p, 24)
    if kind == "genus3_top":
        return (Fraction(p * (p - 1) * (p - 3) * (7 * p ** 3 + 28 * p ** 2 + 101 * p + 80), 5760)
                + Fraction(p ** 3 - p, 24))
    if kind == "genus2_general":
        # printed general-k polynomial; known to disagree with enumeration
        (k,) = args
        return Fraction(1, 24) * ((k + 1) * p ** 3 - Fraction(3, 2) * k * (k + 2) * p ** 2
                                  + Fraction(1, 2) * (k ** 3 + 3 * k ** 2 - 4) * p)
    raise ValueError(f"unsupported closed form {kind!r}")


# lemma checks ---------------------------------------------------------------------

@dataclass
class Check:
    name: str
    passed: bool
    detail: str
    values: dict = field(default_factory=dict)


def check_compare(g: int, p: int) -> Check:
    if g < 2:
        raise ValueError("g >= 2")
    top = dim_recursive(g, p, [p - 3])
    bottom = dim_recursive(g, p, [0])
    if g == 2:
        ok = top == bottom
        rel = "=="
    else:
        ok = top > bottom
        rel = ">"
    return Check(f"compare g={g} p={p}", ok,
                 f"dim W_{{{g},{p},({p - 3})}}={top} {rel} dim W_{{{g},{p},(0)}}={bottom}",
                 {"top": top, "zero": bottom, "method": "recursion"})


def check_growth(g: int, p: int) -> Check:
    if g < 2:
        raise ValueError("g >= 2")
    a = dim_recursive(g, p, [p - 3])
    b = dim_recursive(g + 1, p, [p - 3])
    if g == 2:
        bound = a * a
        ok = b < bound
        rel = "(dim)^2"
    else:
        bound = a * (a - 1) // 2
        ok = 2 * b < a * (a - 1)
        rel = "dim(dim-1)/2"
    return Check(f"growth g={g} p={p}", ok, f"{b} < {rel} = {bound}",
                 {"next": b, "current": a, "bound": bound, "method": "recursion"})


def growth_ratio(p: int) -> Fraction:
    """dim W_{3,p,(p-3)} / (dim W_{2,p,(p-3)})^2."""
    return Fraction(dim_recursive(3, p, [p - 3]), dim_recursive(2, p, [p - 3]) ** 2)


def genus3_top_fast(p: int) -> int:
    """dim W_{3,p,(p-3)} by the fusion recursion in O(p)."""
    return single_label_table(3, p)[-1] if p < 200 else _genus3_top_uncached(p)


def _genus3_top_uncached(p: int) -> int:
    d2 = _next_genus(p, [genus1_two(p, 0, k) for k in colors(p)])
    # dim W_{1,(j,p-3)} = j + 1
    return sum(d * (j + 1) for d, j in zip(d2, colors(p)))


def square_scan(p_max: int, p_min: int = 5) -> list[int]:
    """Primes p in [p_min, p_max] with 1 + 8 dim W_{3,p,(p-3)} a perfect square."""
    if p_max < 5:
        raise ValueError("p_max >= 5")
    hits = []
    for p in range(max(p_min, 5), p_max + 1):
        if p % 2 == 0 or not is_prime(p):
            continue
        f = 1 + 8 * genus3_top_fast(p)
        r = math.isqrt(f)
        if r * r == f:
            hits.append(p)
    return hits


def block_decomposition(g: int, p: int) -> tuple[int, int]:
    """(dim W_{g+1}, sum_i dim W_{g,(i)} dim W_{1,(i)})."""
    lhs = dim_recursive(g + 1, p)
    rhs = sum(dim_recursive(g, p, [i]) * dim_recursive(1, p, [i]) for i in colors(p))
    return lhs, rhs


# tables ------------------------------------------------------------------------

@dataclass(frozen=True)
class DimRow:
    g: int
    p: int
    labels: tuple[int, ...]
    dim: int
    method: str


def dim_row(g: int, p: int, labels: Sequence[int], method: str) -> DimRow:
    labels = tuple(labels)
    if method == "recursion":
        d = dim_recursive(g, p, labels)
    elif method == "enumeration":
        d = dim_enumerated(g, p, labels)
    elif method == "verlinde":
        d = verlinde_dim(g, p, labels)
    elif method == "closed-form":
        if g == 1 and len(labels) <= 2:
            i, j = (list(labels) + [0, 0])[:2]
            d = dim_closed_form("genus1", p, i, j)
        elif labels == (p - 3,) and g in (2, 3):
            d = dim_closed_form(f"genus{g}_top", p)
        else:
            raise ValueError(f"no closed form for g={g}, labels={labels}")
        d = int(d)
    else:
        raise ValueError(f"unknown method {method!r}")
    return DimRow(g, p, labels, d, method)


def dim_table_tsv(rows: Sequence[DimRow]) -> str:
    lines = ["g\tp\tlabels\tdim\tmethod"]
    for r in rows:
        lab = ",".join(map(str, r.labels)) if r.labels else "-"
        lines.append(f"{r.g}\t{r.p}\t{lab}\t{r.dim}\t{r.method}")
    return "\n".join(lines) + "\n"


def parse_dim_table(text: str) -> list[DimRow]:
    lines = text.split("\n")
    if lines[0] != "g\tp\tlabels\tdim\tmethod":
        raise ValueError("not a dimension table")
    rows = []
    for line in lines[1:]:
        if not line:
            continue
        g, p, lab, d, m = line.split("\t")
        labels = () if lab == "-" else tuple(int(x) for x in lab.split(","))
        rows.append(DimRow(int(g), int(p), labels, int(d), m))
    return rows
