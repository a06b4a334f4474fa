import numpy as np
import pytest

from dihedralkit.errors import NotSignatureEligible, PreconditionViolated
from dihedralkit.gf2 import BitMatrix, kronecker_product, p_parse
from dihedralkit.klein import (
    FREE,
    KleinDecomposition,
    KleinSummand,
    Signature,
    klein_decompose,
    klein_heller,
    klein_radical_socle,
    klein_syzygy,
    klein_trivial,
    kv4_regular,
    omega_module,
    omega_summand,
    pencil_reduce,
    signature_of,
    split_free,
)
from dihedralkit.reps import KleinRep, SubgroupId, dual_klein, heller, regular_module, restrict, string_module
from dihedralkit.words import Word, canonical_words_of_length


def dec(*parts):
    counts = {}
    for s, m in parts:
        counts[s] = counts.get(s, 0) + m
    return KleinDecomposition.from_counts(counts)


def test_orientation_oracle_top_socle():
    # kernel-side translates have larger tops, cokernel-side larger socles
    expected = {(-2): (2, 3), (-1): (1, 2), 0: (1, 1), 1: (2, 1), 2: (3, 2)}
    for n, (top, soc) in expected.items():
        m = omega_module(n)
        assert m.dim == 2 * abs(n) + 1
        rad, socle = klein_radical_socle(m)
        assert (m.dim - rad.rows, socle.rows) == (top, soc), f"n={n}"
        assert klein_decompose(m) == dec((omega_summand(n), 1)), f"n={n}"


def test_regular_klein_module_is_free():
    assert klein_decompose(kv4_regular()) == dec((FREE, 1))
    f, comp = split_free(kv4_regular())
    assert f == 1 and comp.dim == 0


def test_two_trivials():
    kk = KleinRep(BitMatrix.identity(2), BitMatrix.identity(2))
    assert klein_decompose(kk) == dec((omega_summand(0), 2))
    f, comp = split_free(kk)
    assert f == 0 and comp.dim == 2


def test_tensor_of_translates():
    o1 = omega_module(1)
    t = KleinRep(kronecker_product(o1.g1, o1.g1), kronecker_product(o1.g2, o1.g2))
    f, comp = split_free(t)
    assert f == 1
    assert klein_decompose(comp) == dec((omega_summand(2), 1))
    from dihedralkit.isodec import klein_isomorphic

    assert klein_isomorphic(comp, omega_module(2))


def test_pencil_requires_uv_zero():
    with pytest.raises(PreconditionViolated):
        pencil_reduce(kv4_regular())


def test_restriction_decompositions():
    ma = string_module(Word.parse("a"), 2)
    assert klein_decompose(restrict(ma, SubgroupId.KLEIN_Y)) == dec((omega_summand(0), 2))
    r = regular_module(2)
    assert klein_decompose(restrict(r, SubgroupId.KLEIN_Y)) == dec((FREE, 2))
    m2 = heller(ma, -2)
    odd = klein_decompose(restrict(m2, SubgroupId.KLEIN_Y)).omega_indices()
    assert odd == [2, 2]


def test_restriction_dimension_ledger():
    m = string_module(Word.parse("a b- a b a-"), 2)
    k = restrict(m, SubgroupId.KLEIN_Y)
    f, comp = split_free(k)
    assert 4 * f + comp.dim == 6
    assert klein_decompose(k).dim() == 6


def test_signature_examples():
    ma = string_module(Word.parse("a"), 2)
    sig, active = signature_of(ma)
    assert sig == Signature.of(0, 0) and active is SubgroupId.KLEIN_Y
    sig2, _ = signature_of(heller(ma, -2))
    assert sig2 == Signature.of(2, 2)


def test_signature_of_induced_translate():
    from dihedralkit.reps import induce, split_projective

    m = induce(klein_heller(klein_trivial(), -1), SubgroupId.KLEIN_Y, 2)
    _, core = split_projective(m)
    sig, active = signature_of(core)
    assert sig == Signature.of(1, 1)


def test_signature_not_eligible():
    with pytest.raises(NotSignatureEligible):
        signature_of(regular_module(2))  # fully periodic restrictions
    with pytest.raises(NotSignatureEligible):
        signature_of(string_module(Word.parse("a b a"), 2))  # periodic string


def test_fixed_point_lemma():
    # cokernel-side translates: joint fixed points match each generator's
    for n in range(0, 7):
        m = klein_heller(klein_trivial(), n)
        _, soc = klein_radical_socle(m)
        ident = BitMatrix.identity(m.dim)
        fix1 = (m.g1 ^ ident).left_kernel().rows
        fix2 = (m.g2 ^ ident).left_kernel().rows
        assert soc.rows == fix1 == fix2 == n + 1


def test_duality_negates_indices():
    for ell in range(0, 6):
        for w in canonical_words_of_length(ell, 2):
            for sub in (SubgroupId.KLEIN_X, SubgroupId.KLEIN_Y):
                k = restrict(string_module(w, 2), sub)
                assert klein_decompose(dual_klein(k)) == klein_decompose(k).negate_omega()


def test_syzygy_shifts_indices():
    for ell in range(0, 6):
        for w in canonical_words_of_length(ell, 2):
            for sub in (SubgroupId.KLEIN_X, SubgroupId.KLEIN_Y):
                k = restrict(string_module(w, 2), sub)
                shifted = klein_decompose(klein_syzygy(k))
                expected = klein_decompose(k).shift_omega(1)
                assert shifted.drop_free() == expected.drop_free()


def test_chain_kernels_match_brute_staircase():
    # independent oracle: rank of the explicitly stacked staircase matrix
    from dihedralkit.klein import _chain_kernel_dims

    rng = np.random.default_rng(23)
    for _ in range(40):
        t = int(rng.integers(1, 5))
        s = int(rng.integers(1, 5))
        c = BitMatrix.random(t, s, rng)
        d = BitMatrix.random(t, s, rng)
        dims = _chain_kernel_dims(c, d, 5)
        for k in range(1, 6):
            big = np.zeros(((k + 1) * s, k * t), dtype=np.uint8)
            for blk in range(k):
                big[blk * s : (blk + 1) * s, blk * t : (blk + 1) * t] = c.dense().T
                big[(blk + 1) * s : (blk + 2) * s, blk * t : (blk + 1) * t] = d.dense().T
            rank = BitMatrix.from_dense(big).rank()
            assert dims[k - 1] == k * t - rank, f"k={k}"


def test_random_sum_recovery():
    from dihedralkit.suites import _random_klein_module

    rng = np.random.default_rng(7)
    for _ in range(300):
        m, expected = _random_klein_module(rng, 12)
        got = klein_decompose(m)
        assert got.dim() == m.dim
        assert got == expected, f"{got} vs {expected}"


def test_idempotence_of_decomposition():
    from dihedralkit.gf2 import direct_sum
    from dihedralkit.suites import _summand_module

    parts = [omega_summand(1), omega_summand(-2), KleinSummand("periodic", invariant=p_parse("1+t+t^2"), power=1)]
    mats1 = [_summand_module(s).g1 for s in parts]
    mats2 = [_summand_module(s).g2 for s in parts]
    m = KleinRep(direct_sum(mats1), direct_sum(mats2))
    first = klein_decompose(m)
    # reassemble from the decomposition and decompose again
    mats1b, mats2b = [], []
    for s, mult in first.parts:
        for _ in range(mult):
            mm = _summand_module(s)
            mats1b.append(mm.g1)
            mats2b.append(mm.g2)
    m2 = KleinRep(direct_sum(mats1b), direct_sum(mats2b))
    assert klein_decompose(m2) == first


def test_decomposition_json():
    d = klein_decompose(restrict(heller(string_module(Word.parse("a"), 2), -2), SubgroupId.KLEIN_Y))
    js = d.to_json()
    kinds = {entry["kind"] for entry in js}
    assert "omega" in kinds
    for entry in js:
        assert "mult" in entry
        if entry["kind"] == "periodic":
            assert "poly" in entry and "power" in entry


def test_klein_summand_dims():
    assert omega_summand(0).dim() == 1
    assert omega_summand(-3).dim() == 7
    assert FREE.dim() == 4
    assert KleinSummand("periodic", invariant=p_parse("1+t+t^2"), power=2).dim() == 8
    assert KleinSummand("periodic_inf", power=3).dim() == 6
