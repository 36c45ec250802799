import cmath
import math
import random
from fractions import Fraction

import pytest
import sympy

from skeinquot.cyclo import (CycNum, LevelError, ResidueField, check_level, complex_embed,
                             cyclotomic_mod, embeddings, is_root_of_unity, level_flags,
                             make_root, parse_cyc, poly_mulmod, reduce_mod, serialize_cyc,
                             splitting_data)


def rand_cyc(p, rng, lo=-3, hi=3):
    return CycNum.from_fractions(p, [Fraction(rng.randint(lo, hi), rng.randint(1, 3))
                                     for _ in range(p - 1)])


def zeta(p, k=1):
    return CycNum.zeta_power(p, k)


@pytest.mark.parametrize("p", [4, 9, 15, 2, 3])
def test_level_rejects(p):
    with pytest.raises(LevelError):
        check_level(p)


def test_level_flags():
    assert level_flags(7) == []
    assert level_flags(5)


def test_unitary_root_p5_matches_closed_form():
    A = make_root(5)
    expected = (-1) ** 2 * cmath.exp((5 + 1) * math.pi * 1j / 10)
    assert abs(complex_embed(A, 1) - expected) < 1e-12
    assert abs(complex_embed(A, 1) - cmath.exp(3j * math.pi / 5)) < 1e-12
    assert abs(complex_embed(A * A, 1) - cmath.exp(6j * math.pi / 5)) < 1e-12


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_root_is_primitive_2p(p):
    A = make_root(p)
    assert A ** (2 * p) == 1
    assert A ** p == -1
    assert is_root_of_unity(A * A).order == p
    for t in range(1, p):
        assert abs(abs(complex_embed(A, t)) - 1) < 1e-12


@pytest.mark.parametrize("p", [7, 11])
def test_unitary_root_closed_form(p):
    expected = (-1) ** ((p - 1) // 2) * cmath.exp((p + 1) * math.pi * 1j / (2 * p))
    assert abs(complex_embed(make_root(p), 1) - expected) < 1e-12


def test_embed_basis_and_real_elements():
    p = 7
    assert abs(complex_embed(zeta(p), 1) - cmath.exp(2j * math.pi / p)) < 1e-12
    x = zeta(p) + zeta(p).conj()
    for e in embeddings(p):
        v = complex_embed(x, e)
        assert abs(v.imag) < 1e-12
        assert abs(v.real - 2 * math.cos(2 * math.pi * e.t / p)) < 1e-12


def test_embeddings_enumerate_once():
    assert [e.t for e in embeddings(11)] == [1, 2, 3, 4, 5]


def test_one_plus_zeta_modulus():
    x = 1 + zeta(5)
    assert abs(abs(complex_embed(x, 1)) - 1.6180339887) < 1e-9
    r = is_root_of_unity(x)
    assert not r and r.witness == "embedding 1"
    assert abs(r.modulus - 1.618033988749895) < 1e-9


@pytest.mark.parametrize("p", [5, 7, 11])
def test_ring_axioms_random(p):
    rng = random.Random(p)
    for _ in range(20):
        x, y, z = (rand_cyc(p, rng) for _ in range(3))
        assert x + y == y + x
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x.conj().conj() == x
        assert (x * y).conj() == x.conj() * y.conj()
        c = complex_embed(x.conj(), 1)
        assert abs(c - complex_embed(x, 1).conjugate()) < 1e-10
        if not x.is_zero():
            assert x * x.inverse() == 1
        s = x + x.conj()
        for e in embeddings(p):
            assert abs(complex_embed(s, e).imag) < 1e-10


def test_canonical_representation():
    p = 7
    s = CycNum.from_int(p, 0)
    for k in range(p):
        s = s + zeta(p, k)
    assert s.is_zero()
    x = CycNum.from_fractions(p, [Fraction(2, 4)] + [0] * 5)
    assert x.den == 2 and x.num[0] == 1


@pytest.mark.parametrize("p", [5, 7, 11])
def test_root_of_unity_oracle(p):
    rng = random.Random(100 + p)
    for a in range(2 * p):
        for sign in (1, -1):
            x = zeta(p, a) * sign
            r = is_root_of_unity(x)
            brute = next(k for k in range(1, 2 * p + 1) if x ** k == 1)
            assert r and r.order == brute
    for _ in range(100):
        x = rand_cyc(p, rng)
        if x.is_zero():
            continue
        brute = any(x ** k == 1 for k in range(1, 2 * p + 1))
        assert bool(is_root_of_unity(x)) == brute


def test_root_of_unity_examples():
    assert is_root_of_unity(zeta(7)).order == 7
    assert is_root_of_unity(CycNum.from_int(7, -1)).order == 2
    with pytest.raises(ValueError):
        is_root_of_unity(CycNum.from_int(7, 0))


@pytest.mark.parametrize("q,p,f,count", [(29, 7, 1, 6), (2, 7, 3, 2), (3, 5, 4, 1), (13, 7, 2, 3)])
def test_splitting_data(q, p, f, count):
    d = splitting_data(q, p)
    assert (d.f, d.count) == (f, count)
    prod = [1]
    for m in d.moduli:
        prod = poly_mulmod(prod, m, q)
    assert prod == cyclotomic_mod(p, q)


def test_splitting_ramified():
    with pytest.raises(ValueError):
        splitting_data(7, 7)


@pytest.mark.parametrize("p,q", [(7, 29), (7, 13), (5, 11), (7, 2)])
def test_reduce_homomorphism(p, q):
    rng = random.Random(p * q)
    F = ResidueField(p, q, 0)
    for _ in range(1000):
        x = rand_cyc(p, rng, -5, 5)
        y = rand_cyc(p, rng, -5, 5)
        if x.den % q == 0 or y.den % q == 0:
            continue
        assert F.reduce(x * y) == F.mul(F.reduce(x), F.reduce(y))
        assert F.reduce(x + y) == F.add(F.reduce(x), F.reduce(y))


def test_reduce_examples():
    F = ResidueField(7, 29, 0)
    assert reduce_mod(CycNum.from_int(7, 40), F) == (11,)
    assert F.order(F.reduce(zeta(7))) == 7
    x = 1 + zeta(7)
    assert F.reduce(x * x.conj()) == F.mul(F.reduce(x), F.reduce(x.conj()))
    G = ResidueField(7, 3, 0)
    with pytest.raises(ArithmeticError):
        G.reduce(CycNum.from_fractions(7, [Fraction(1, 3)] + [0] * 5))


def test_residue_index_range():
    with pytest.raises(IndexError):
        ResidueField(7, 29, 6)


def test_serialization_roundtrip():
    rng = random.Random(3)
    for p in (5, 7):
        for _ in range(20):
            x = rand_cyc(p, rng)
            s = serialize_cyc(x)
            assert " " not in s and s.startswith(f"p:{p};coeffs:")
            assert parse_cyc(s) == x
            assert serialize_cyc(parse_cyc(s)) == s
    F = ResidueField(7, 2, 1)
    a = F.reduce(zeta(7, 3))
    assert F.parse(F.serialize(a)) == a


def test_norm_is_rational_product_of_conjugates():
    x = 2 + zeta(7) - zeta(7, 3)
    n = x.norm()
    prod = CycNum.from_int(7, 1)
    for t in range(1, 7):
        prod = prod * x.galois(t)
    assert prod == CycNum.from_fraction(7, n)
    poly = sympy.Poly(sympy.cyclotomic_poly(7, sympy.Symbol("z")))
    assert poly.degree() == 6
