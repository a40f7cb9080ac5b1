import random

import pytest

from gln_modp.finite_field import FqField
from gln_modp.hecke0 import (
    DerivationCapExceeded, ExtAffinePerm, Hecke0Algebra,
    derive_rotation_invariance, group_mul, has_finite_descent, identity,
    inverse, reduced_word, rotation, signed_product, simple, translation,
    verify_braid_and_rotation, verify_translation_power,
    verify_word_shift_identity,
)

F3 = FqField(3)


def rand_perm(rng, n):
    x = identity(n)
    for _ in range(rng.randint(0, 6)):
        x, _ = group_mul(x, simple(n, rng.randrange(n)))
    if rng.random() < 0.5:
        x, _ = group_mul(x, rotation(n, rng.randint(1, n - 1)))
    return x


def test_window_validation():
    with pytest.raises(ValueError):
        ExtAffinePerm((1, 3))  # residues collide
    assert ExtAffinePerm((3, 2)).rotation == 1


def test_lengths():
    assert identity(4).length() == 0
    assert rotation(5).length() == 0
    assert simple(3, 0).length() == 1
    assert simple(3, 2).length() == 1
    assert translation((1, 0)).length() == 1
    assert translation((0, 1)).length() == 1   # wrapped inversion family
    assert translation((2, 0)).length() == 2
    assert translation((1, 1, 0)).length() == 2
    for n in (2, 3, 4, 5):
        for i in range(1, n):
            t = translation((1,) * i + (0,) * (n - i))
            assert t.length() == i * (n - i)


def test_relations():
    for n in (2, 3, 4, 5):
        assert verify_braid_and_rotation(n)
        assert verify_word_shift_identity(n)
        for i in range(1, n):
            assert verify_translation_power(n, i)


def test_relations_char2():
    # the identities are characteristic independent
    F2 = FqField(2)
    assert verify_braid_and_rotation(3, F2)
    assert verify_word_shift_identity(4, F2)


def test_quadratic_contraction():
    H = Hecke0Algebra(2, F3)
    assert H.S(1) * H.S(1) == -H.S(1)
    acc = H.one
    for _ in range(2):
        acc = acc * H.Pi()
    assert acc == H.one  # Pi^n = 1 at the default central value


def test_nontrivial_center_scalar():
    F5 = FqField(5)
    H = Hecke0Algebra(3, F5, zeta=2)
    acc = H.one
    for _ in range(3):
        acc = acc * H.Pi()
    assert acc == H.element({identity(3): F5(2)})


def test_sign_is_defect_parity():
    rng = random.Random(3)
    for n in (2, 3, 4):
        for _ in range(80):
            a, b = rand_perm(rng, n), rand_perm(rng, n)
            sign, wraps, z = signed_product(a, b)
            defect = a.length() + b.length() - z.length()
            assert defect >= 0
            assert sign == (-1) ** defect
            if defect == 0:
                assert sign == 1


def test_associativity_and_unit():
    rng = random.Random(4)
    for n in (2, 3, 4):
        H = Hecke0Algebra(n, F3)
        for _ in range(40):
            a, b, c = (H.basis(rand_perm(rng, n)) for _ in range(3))
            assert (a * b) * c == a * (b * c)
            assert a * H.one == a and H.one * a == a


def test_rotation_conjugates_generators():
    for n in (2, 3, 4, 5):
        H = Hecke0Algebra(n, F3)
        for k in range(n):
            assert H.Pi() * H.basis(simple(n, k)) == H.basis(simple(n, (k - 1) % n)) * H.Pi()


def test_reduced_word_and_inverse():
    rng = random.Random(5)
    for n in (2, 3, 4):
        H = Hecke0Algebra(n, F3)
        for _ in range(30):
            x = rand_perm(rng, n)
            letters, rot = reduced_word(x)
            assert len(letters) == x.length()
            assert H.word_product(letters, rot) == H.basis(x)
            xi, _ = inverse(x)
            prod, _ = group_mul(x, xi)
            assert prod == identity(n)


def test_translation_power_example():
    # (S_2 Pi)^2 is the translation by (1,1,0), of length 2, with sign +1
    H = Hecke0Algebra(3, F3)
    e = H.S(2) * H.Pi()
    assert e * e == H.basis(translation((1, 1, 0)))


def test_finite_descent_detection():
    assert has_finite_descent(simple(3, 1))
    assert not has_finite_descent(identity(3))
    assert not has_finite_descent(rotation(3))
    assert not has_finite_descent(translation((1, 0, 0)))


def test_derivation_success():
    for n in (2, 3, 4):
        rep = derive_rotation_invariance(n, max(n * n, 20))
        assert rep.status == "derived"
        assert rep.conclusion == "v = Πv"
        assert len(rep.steps) == n - 1
        assert rep.cap_used <= rep.cap


def test_derivation_trace_n2():
    rep = derive_rotation_invariance(2, 4)
    assert rep.steps[0].trace_lines == (
        "(S_1Π)²v = S_1Π(v - Πv)",
        "= S_1Πv - S_1v",
        "= S_1Πv",
    )


def test_derivation_deterministic():
    a = derive_rotation_invariance(3, 9).to_json()
    b = derive_rotation_invariance(3, 9).to_json()
    assert a == b


def test_derivation_precondition():
    with pytest.raises(ValueError):
        derive_rotation_invariance(3, 8)  # cap below n^2


def test_derivation_with_nontrivial_center_collapses():
    # with zeta != 1 the relations force (zeta - 1) v = 0, so the quotient
    # module vanishes and the conclusion holds vacuously; the engine's
    # certificate is still sound
    F5 = FqField(5)
    rep = derive_rotation_invariance(2, 6, F5, zeta=2)
    assert rep.status == "derived"


def test_cap_exceeded_reports_inconclusive(monkeypatch):
    import gln_modp.hecke0 as h0mod

    def refuse(self, vec):
        raise h0mod._CapSignal()

    monkeypatch.setattr(h0mod._ModuleEngine, "ensure_zero", refuse)
    with pytest.raises(DerivationCapExceeded) as exc:
        h0mod.derive_rotation_invariance(2, 4)
    assert exc.value.report.status == "inconclusive"
    assert "not a refutation" in exc.value.report.conclusion
