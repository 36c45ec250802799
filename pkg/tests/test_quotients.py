import random

import numpy as np
import pytest

from skeinquot import linalg as la
from skeinquot import quotients as Q
from skeinquot import rep
from skeinquot.cyclo import ResidueField, make_root
from skeinquot.skein import Skein


@pytest.fixture(scope="module")
def thtorus():
    return rep.build(rep.TwiceHoledTorus(2, 4), 7)


@pytest.fixture(scope="module")
def reduced29(thtorus):
    return Q.reduce_rep(thtorus, 29)


def sl2(q):
    return Q.ResidueRep.from_integer_matrices(q, {"u": [[1, 1], [0, 1]], "l": [[1, 0], [1, 1]],
                                                  "i": [[1, 0], [0, 1]],
                                                  "d": [[2, 0], [0, (q + 1) // 2]]})


def test_sl2_7_order():
    R = sl2(7)
    res = Q.closure(R, ["u", "l"])
    assert res.complete and res.order == 336 == 7 * (7 * 7 - 1)
    assert Q.gl_order(2, 7) % res.order == 0
    assert Q.closure(R, ["u", "l"], projective=True).order == 168


def test_identity_closure_and_cap():
    R = sl2(7)
    assert Q.closure(R, ["i"]).order == 1
    res = Q.closure(R, ["u", "l"], cap=100)
    assert res.status == "cap-exceeded" and res.order is None and res.order_text() == "undecided"
    with pytest.raises(ValueError):
        Q.closure(R, ["u"], cap=0)


def test_closure_is_deterministic_and_closed():
    R = sl2(5)
    a = Q.closure(R, ["u", "l"], keep_elements=True)
    b = Q.closure(R, ["u", "l"], keep_elements=True)
    assert np.array_equal(a.elements, b.elements)
    rng = random.Random(0)
    E = a.elements.astype(np.int64)
    gens = [R.array("u"), R.array("l")]
    for _ in range(2000):
        x = E[rng.randrange(len(E))]
        y = E[rng.randrange(len(E))]
        for z in (x @ y % 5, x @ gens[rng.randrange(2)] % 5, Q._inverse_mod(x, 5)):
            assert Q._keys(z[None], 5, 2, 1)[0] in a.keys


def test_reduce_twist_orders(reduced29, thtorus):
    F = reduced29.field
    T = reduced29.mats["x+"]
    for i in range(3):
        assert 14 % F.order(T[i][i]) == 0
    for name, M in thtorus.named().items():
        d = F.reduce(la.det(M))
        assert 14 % F.order(d) == 0


def test_reduce_identity(thtorus):
    R = Q.reduce_rep(thtorus, 29, names=["x+"])
    F = R.field
    I = Q.reduce_matrix(thtorus.space.identity(), F)
    assert I == tuple(tuple(F.one() if i == j else F.zero() for j in range(3)) for i in range(3))


@pytest.mark.parametrize("q", [29, 13, 11])
def test_reduce_homomorphism_and_hermitian(thtorus, q):
    R = Q.reduce_rep(thtorus, q)
    names = sorted(thtorus.named())
    rng = random.Random(q)
    pairs = [(rng.choice(names), rng.choice(names)) for _ in range(100)]
    assert Q.homomorphism_check(thtorus, R, pairs)
    assert Q.hermitian_check(thtorus, R)


def test_bad_primes(thtorus):
    for q in (2, 7, 9):
        with pytest.raises(Q.BadPrimeError):
            Q.reduce_rep(thtorus, q)
    with pytest.raises(IndexError):
        Q.reduce_rep(thtorus, 29, index=6)


def test_residue_file_roundtrip(thtorus):
    R = Q.reduce_rep(thtorus, 13, 1)
    text = R.serialize()
    assert Q.ResidueRep.parse(text).serialize() == text


def test_same_subgroup_examples(reduced29):
    R = reduced29
    assert Q.same_subgroup(R, ["x+", "x-"], ["x+", "x-"], cap=10**5) == "true"
    assert Q.same_subgroup(R, ["x+"], ["x+", "x-"], cap=10**5) == "false"


def test_same_subgroup_push_vs_mcg(reduced29):
    d = Q.compare_subgroups(reduced29, ["push:x", "push:y", "push:d"],
                            ["x+", "x-", "y+", "y-", "d+"], cap=10**5, projective=True)
    assert d.verdict == "true"
    for name, word in d.certificate.items():
        T = reduced29.array(name)
        assert Q._same_up_to_scalar(reduced29, Q.evaluate_word(reduced29, word), T, True)


def test_normality(reduced29):
    R = sl2(7)
    assert Q.normality_check(R, ["u", "l"], ["u", "l"]) == "true"
    assert Q.normality_check(R, ["i"], ["u", "l"]) == "true"
    assert Q.normality_check(R, ["u"], ["u", "l"]) == "false"
    assert Q.normality_check(reduced29, ["push:x", "push:y", "push:d"], ["x+", "y+", "d+"],
                             cap=10**5, projective=True) == "true"


def test_burau_closures_reproducible():
    bb = rep.burau_block(3, 2, 7)
    R = Q.reduce_rep(bb.bundle, 29, names=["s1", "s2"])
    a = Q.closure(R, ["s1", "s2"], projective=True)
    b = Q.closure(R, ["s1", "s2"], projective=True)
    assert a.complete and a.order == b.order == 29 * (29**2 - 1) // 2


def test_projective_extension_field():
    B = rep.build(rep.OneHoledTorus(0), 7)
    R = Q.reduce_rep(B, 13)
    assert R.f == 2
    lin = Q.closure(R, ["a", "b"])
    proj = Q.closure(R, ["a", "b"], projective=True)
    assert lin.complete and proj.complete and lin.order % proj.order == 0


def test_spectrum_report_examples(thtorus):
    r = Q.spectrum_report(thtorus.curves["x+"])
    assert r.verdict == "finite order" and 14 % r.order == 0
    assert Q.spectrum_report(thtorus.space.identity()).order == 1
    M = Q.word_matrix(thtorus, "d.x")
    r = Q.spectrum_report(M)
    assert r.verdict == "infinite order"
    assert r.witness["kind"] == "non-cyclotomic factor" and r.witness["modulus"] > 1 + 1e-9


def test_spectrum_unipotent():
    sk = Skein(make_root(7))
    one, zero = sk.one, sk.one - sk.one
    J = la.mat([[one, one], [zero, one]])
    r = Q.spectrum_report(J)
    assert r.verdict == "infinite order" and r.witness["kind"] == "unipotent part"


def test_finite_verdict_power_is_identity(thtorus):
    for name in ("s", "y+", "d+"):
        M = thtorus.named()[name]
        r = Q.spectrum_report(M)
        if r.verdict == "finite order":
            assert la.matpow(M, r.order) == thtorus.space.identity()


def test_words_shortlex():
    ws = list(Q.words(["a", "A"], 3))
    assert ws == [("a",), ("A",), ("a", "a"), ("A", "A"), ("a", "a", "a"), ("A", "A", "A")]


def test_residue_field_parse_guard():
    F = ResidueField(7, 29, 0)
    G = ResidueField(7, 29, 1)
    with pytest.raises(ValueError):
        G.parse(F.serialize(F.one()))
