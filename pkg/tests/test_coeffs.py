import pytest

from symop import coeffs, partitions as pt, symfunc as sf


def test_trivial_character_is_one():
    for n in range(1, 7):
        for rho in pt.partitions_of(n):
            assert coeffs.mn_character((n,), rho) == 1


def test_character_examples():
    # number of standard tableaux of shape (2,1)
    assert coeffs.mn_character((2, 1), (1, 1, 1)) == 2
    # sign character at a transposition
    assert coeffs.mn_character((1, 1), (2,)) == -1


def test_character_size_mismatch():
    with pytest.raises(ValueError):
        coeffs.mn_character((2, 1), (2,))


def test_column_orthogonality_up_to_6():
    for n in range(7):
        classes = pt.partitions_of(n)
        for rho in classes:
            for tau in classes:
                total = sum(
                    coeffs.mn_character(lam, rho) * coeffs.mn_character(lam, tau)
                    for lam in classes
                )
                assert total == (pt.z_factor(rho) if rho == tau else 0)


def test_lr_examples():
    for lam in pt.partitions_of(4):
        assert coeffs.lr_coeff(lam, (), lam) == 1
    assert coeffs.lr_coeff((2, 1), (1,), (1, 1)) == 1
    assert coeffs.lr_coeff((3, 2, 1), (2, 1), (2, 1)) == 2
    assert coeffs.lr_coeff((3, 1), (1,), (1,)) == 0  # size mismatch
    assert coeffs.lr_coeff((2, 2), (3,), (1,)) == 0  # not contained


def test_lr_symmetry_and_conjugation_up_to_6():
    for n in range(7):
        for nu in pt.partitions_of(n):
            for a in range(n + 1):
                for lam in pt.partitions_of(a):
                    for mu in pt.partitions_of(n - a):
                        c = coeffs.lr_coeff(nu, lam, mu)
                        assert c == coeffs.lr_coeff(nu, mu, lam)
                        assert c == coeffs.lr_coeff(
                            pt.conjugate(nu), pt.conjugate(lam), pt.conjugate(mu)
                        )


def test_kron_trivial_row_is_unit():
    for n in range(1, 6):
        for mu in pt.partitions_of(n):
            for nu in pt.partitions_of(n):
                want = 1 if mu == nu else 0
                assert coeffs.kron_coeff((n,), mu, nu) == want


def test_kron_examples():
    assert coeffs.kron_coeff((2, 1), (2, 1), (2, 1)) == 1
    assert coeffs.kron_coeff((1, 1), (1, 1), (2,)) == 1


def test_kron_size_mismatch():
    with pytest.raises(ValueError):
        coeffs.kron_coeff((2,), (1,), (2,))


def test_kron_symmetry():
    import itertools

    for lam, mu, nu in ((2, 1), (1, 1, 1), (3,)), ((2, 2), (3, 1), (2, 1, 1)):
        vals = {
            coeffs.kron_coeff(*perm)
            for perm in itertools.permutations((lam, mu, nu))
        }
        assert len(vals) == 1


def test_kron_matches_symfunc_kronecker_up_to_6():
    for n in range(7):
        parts = pt.partitions_of(n)
        for lam in parts:
            for mu in parts:
                prod = sf.kronecker(sf.schur(lam), sf.schur(mu))
                for nu in parts:
                    assert coeffs.kron_coeff(lam, mu, nu) == prod.coeff(nu)


def test_lr_matches_skew_schur_up_to_6():
    for n in range(7):
        for nu in pt.partitions_of(n):
            for lam in pt.sub_partitions(nu):
                expansion = sf.skew_schur(nu, lam)
                for mu in pt.partitions_of(n - sum(lam)):
                    assert coeffs.lr_coeff(nu, lam, mu) == expansion.coeff(mu)
