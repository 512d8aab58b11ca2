"""The shipped fixture catalog.

None of these is assumed valid; the test suite verifies each one.
"""

from __future__ import annotations

from itertools import permutations

from .algebra import BracketTensor, HomNambuAlgebra, MultiLinearMap
from .exact import Matrix

RHO = Matrix.diag([4, 2])


def _perm_sign(p) -> int:
    p = list(p)
    sign = 1
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def abelian(d: int, n: int, alpha: Matrix | None = None) -> HomNambuAlgebra:
    alpha = Matrix.identity(d) if alpha is None else alpha
    return HomNambuAlgebra(BracketTensor(d, n), (alpha,) * (n - 1), f"abelian({d},{n})")


def leib2() -> HomNambuAlgebra:
    """[e2, e2] = e1 on a 2-dim space, every other product zero."""
    return HomNambuAlgebra.untwisted(BracketTensor(2, 2, {(1, 1, 0): 1}), "leib2")


def leib2_corrupt() -> HomNambuAlgebra:
    """[e1, e1] = e2 and [e2, e2] = e1: fails the Leibniz identity."""
    return HomNambuAlgebra.untwisted(
        BracketTensor(2, 2, {(0, 0, 1): 1, (1, 1, 0): 1}), "leib2_corrupt")


def nambu4() -> HomNambuAlgebra:
    """Totally antisymmetric 3-ary bracket on K^4: [e_i,e_j,e_k] = sgn(ijkl) e_l."""
    consts = {}
    for p in permutations(range(4)):
        i, j, k, l = p
        consts[(i, j, k, l)] = _perm_sign(p)
    return HomNambuAlgebra.untwisted(BracketTensor(4, 3, consts), "nambu4")


def leib2_twist() -> HomNambuAlgebra:
    """leib2 twisted by its endomorphism diag(4, 2): bracket rho∘[.,.], twist rho."""
    base = leib2()
    return HomNambuAlgebra(BracketTensor.from_map(base.bracket.postcompose(RHO)),
                           (RHO,), "leib2_twist")


def nambu4_neg() -> HomNambuAlgebra:
    """nambu4 twisted by the morphism -id: a multiplicative 3-ary algebra with alpha != id."""
    m = -Matrix.identity(4)
    base = nambu4()
    return HomNambuAlgebra(BracketTensor.from_map(base.bracket.postcompose(m)),
                           (m, m), "nambu4_neg")


def hom_lie2() -> HomNambuAlgebra:
    """[e1, e2] = e2 = -[e2, e1], alpha = id."""
    return HomNambuAlgebra.untwisted(
        BracketTensor(2, 2, {(0, 1, 1): 1, (1, 0, 1): -1}), "hom_lie2")


def algebra_catalog() -> dict:
    """Every shipped algebra keyed by name."""
    algs = [abelian(1, 2), abelian(2, 2), abelian(2, 3), leib2(), nambu4(),
            leib2_twist(), nambu4_neg(), hom_lie2()]
    return {a.name: a for a in algs}


# endomorphism catalogs: candidates, not all of them morphisms
LEIB2_ENDOMORPHISMS = {
    "id": Matrix.identity(2),
    "rho": RHO,
    "diag(1,2)": Matrix.diag([1, 2]),
    "zero": Matrix.zeros(2),
    "nilpotent": Matrix.from_rows([[0, 1], [0, 0]]),
    "shear": Matrix.from_rows([[1, 1], [0, 1]]),
    "mixed": Matrix.from_rows([[9, -1], [0, -3]]),
    "swap": Matrix.from_rows([[0, 1], [1, 0]]),
}

LEIB2_TWIST_MORPHISMS = {
    "id": Matrix.identity(2),
    "rho": RHO,
    "diag(9,-3)": Matrix.diag([9, -3]),
    "diag(1/4,1/2)": Matrix.diag(["1/4", "1/2"]),
    "zero": Matrix.zeros(2),
    "diag(1,2)": Matrix.diag([1, 2]),
}



def leib2_functional():
    """1-dim leib2-module with [mu, x] = lambda(x) mu for lambda = e2*; a valid representation."""
    from .cohomology import functional_module

    return functional_module(leib2(), [0, 1], 0, "leib2_functional")


def leib2_functional_last():
    """The same functional acting in the last slot, [x, mu] = lambda(x) mu; not a representation."""
    from .cohomology import functional_module

    return functional_module(leib2(), [0, 1], 1, "leib2_functional_last")


def leib2_cochains() -> dict:
    """Named 2-cochains of leib2 with values in a 1-dim module."""
    return {
        "f22": MultiLinearMap((2, 2), 1, {(1, 1, 0): 1}),
        "f11": MultiLinearMap((2, 2), 1, {(0, 0, 0): 1}),
        "f12": MultiLinearMap((2, 2), 1, {(0, 1, 0): 1}),
    }
