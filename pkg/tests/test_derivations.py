import pytest

from golden_values import DER_DIMS, INNER_DIMS
from homnambu.algebra import BracketTensor, HomNambuAlgebra
from homnambu.derivations import (
    assemble_der_algebra,
    check_inn_ideal,
    commutator,
    derivation_space,
    fixed_subspace,
    inner_derivation,
    inner_space,
    is_derivation,
    omega_derivation_report,
    omega_derivation_space,
    sum_closure_check,
)
from homnambu.errors import NotADerivation, NotASubspace, NotFixedPoint, NotMultiplicative
from homnambu.exact import Matrix
from homnambu.fixtures import algebra_catalog, hom_lie2, leib2, leib2_corrupt, leib2_twist, nambu4


def test_leib2_degree_zero_basis():
    sp = derivation_space(leib2(), 0)
    assert sp.basis == [Matrix.from_rows([[0, 1], [0, 0]]), Matrix.from_rows([[2, 0], [0, 1]])]
    # the identity is not a derivation of [e2, e2] = e1
    assert not is_derivation(Matrix.identity(2), leib2(), 0)


@pytest.mark.parametrize("name", sorted(DER_DIMS))
def test_dimensions_match_golden(name):
    alg = algebra_catalog()[name]
    dims = tuple(derivation_space(alg, k).dimension for k in range(3))
    assert dims == DER_DIMS[name]


@pytest.mark.parametrize("name", sorted(DER_DIMS))
def test_every_basis_element_passes_direct_check(name):
    alg = algebra_catalog()[name]
    for k in range(3):
        for D in derivation_space(alg, k).basis:
            assert omega_derivation_report(D, alg.bracket, alg.alpha, k).holds


def test_leib2_twist_degrees():
    # Der_{alpha^k} of leib2_twist is spanned by diag(2^(k+1), 1)
    for k in range(4):
        (D,) = derivation_space(leib2_twist(), k).basis
        assert D == Matrix.diag([2 ** (k + 1), 1])


def test_non_multiplicative_rejected():
    alg = HomNambuAlgebra(BracketTensor(2, 3), (Matrix.identity(2), Matrix.diag([1, 2])))
    with pytest.raises(NotMultiplicative):
        derivation_space(alg, 0)


def test_commutator_degree_and_membership():
    alg = leib2_twist()
    D0 = derivation_space(alg, 0).basis[0]
    D1 = derivation_space(alg, 1).basis[0]
    C, deg = commutator(D0, D1, 0, 1, derivation_space(alg, 1))
    assert deg == 1 and C.is_zero()
    bogus = Matrix.from_rows([[0, 1], [0, 0]])
    with pytest.raises(NotASubspace):
        commutator(bogus, D0, 0, 0, derivation_space(alg, 0))


@pytest.mark.parametrize("name", sorted(DER_DIMS))
def test_graded_algebra(name):
    gda = assemble_der_algebra(algebra_catalog()[name], 2)
    assert not gda.additivity_failures
    assert gda.hom_lie_report().holds


def test_inner_derivations():
    alg = nambu4()
    ad = inner_derivation(alg, 0, [(1, 0, 0, 0), (0, 1, 0, 0)])
    assert is_derivation(ad, alg, 1)
    with pytest.raises(NotFixedPoint):
        inner_derivation(leib2_twist(), 0, [(1, 0)])


@pytest.mark.parametrize("name", sorted(INNER_DIMS))
def test_inner_dims(name):
    alg = algebra_catalog()[name]
    for k in range(3):
        inner = inner_space(alg, k)
        assert inner.dimension == INNER_DIMS[name]
        for _, ad in inner.generators:
            assert is_derivation(ad, alg, k + 1)


def test_fixed_subspace():
    assert fixed_subspace(Matrix.diag([4, 2])) == []
    assert len(fixed_subspace(Matrix.identity(3))) == 3


@pytest.mark.parametrize("name", ["leib2", "hom_lie2", "nambu4"])
def test_inn_ideal(name):
    rep = check_inn_ideal(algebra_catalog()[name], 2)
    assert rep.holds and rep.instances > 0


def test_omega_space_of_bracket_equals_derivation_space():
    for alg in algebra_catalog().values():
        for k in range(2):
            a = omega_derivation_space(alg.dim, alg.bracket, alg.alpha, k).basis
            b = derivation_space(alg, k).basis
            assert a == b


def test_sum_closure():
    om, sig = leib2().bracket, hom_lie2().bracket
    D = Matrix.from_rows([[0, 0], [0, 0]])
    assert sum_closure_check(D, om, sig, Matrix.identity(2), 0)
    # a derivation of one summand only need not be one of the sum
    nil = Matrix.from_rows([[0, 1], [0, 0]])
    assert is_derivation(nil, leib2(), 0)
    assert not is_derivation(nil, hom_lie2(), 0)
    assert not sum_closure_check(nil, om, sig, Matrix.identity(2), 0)


def test_inner_derivation_check_raises():
    # outside the Leibniz world right multiplications need not be derivations
    with pytest.raises(NotADerivation):
        inner_derivation(leib2_corrupt(), 0, [(1, 0)])
