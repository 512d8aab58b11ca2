"""Algebras built from algebras: twists, derivation extensions, tensor powers.

Tensor powers use the row-major basis of g^⊗n (first factor most
significant), the same codec as :func:`homnambu.exact.linearize`.

Where the correctness of a construction depends on hypotheses that are
unclear for twisted inputs (the untwisted tensor bracket, the (n+1)-ary
tensor power) the builder returns the algebra together with the verifier's
verdict instead of assuming one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .algebra import (
    BracketTensor,
    HomNambuAlgebra,
    MultiLinearMap,
    verify_hom_nambu,
    verify_leibniz,
    verify_morphism,
    verify_multiplicative,
)
from .errors import (
    ArityMismatch,
    DimMismatch,
    IndexOutOfRange,
    NotAMorphism,
    NotLeibniz,
    NotMultiplicative,
    TwistCommutationFailure,
)
from .exact import Matrix, Q, delinearize, kron_power, linearize, sparse_axpy, tensor_sparse


@dataclass
class Built:
    """A constructed algebra plus the verdicts computed on it."""

    algebra: HomNambuAlgebra
    verdicts: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return all(r.holds for r in self.verdicts.values())


@dataclass(frozen=True)
class TensorPowerSpace:
    base_dim: int
    power: int

    @property
    def total_dim(self) -> int:
        return self.base_dim ** self.power

    def index(self, digits: Sequence[int]) -> int:
        return linearize(digits, self.base_dim)

    def digits(self, index: int) -> tuple:
        return delinearize(index, self.base_dim, self.power)

    def basis(self):
        return product(range(self.base_dim), repeat=self.power)


# ---------------------------------------------------------------------------
# twists


def twist_by_endomorphism(leib: HomNambuAlgebra, rho: Matrix) -> HomNambuAlgebra:
    """(g, rho∘[.,...,.], rho) from a Leibniz n-algebra and one of its endomorphisms."""
    if not leib.untwisted_flag or not verify_leibniz(leib, witness_cap=1).holds:
        raise NotLeibniz(f"{leib.name or 'input'} is not an untwisted Leibniz algebra")
    rep = verify_morphism(rho, leib, leib, witness_cap=1)
    if not rep.holds:
        raise NotAMorphism(f"endomorphism fails at {rep.witnesses[0][0]}")
    bracket = BracketTensor.from_map(leib.bracket.postcompose(rho))
    return HomNambuAlgebra(bracket, (rho,) * (leib.arity - 1), _derived_name(leib, "twist"))


def compose_twist(alg: HomNambuAlgebra, beta: Matrix) -> HomNambuAlgebra:
    """(g, beta∘[.,...,.], beta∘alpha) for a multiplicative algebra and a morphism beta."""
    if not alg.multiplicative_flag:
        raise NotMultiplicative(alg.name)
    rep = verify_morphism(beta, alg, alg, witness_cap=1)
    if not rep.holds:
        raise NotAMorphism(f"beta fails at {rep.witnesses[0][0]}")
    bracket = BracketTensor.from_map(alg.bracket.postcompose(beta))
    return HomNambuAlgebra(bracket, (beta @ alg.alpha,) * (alg.arity - 1),
                           _derived_name(alg, "compose"))


def _derived_name(alg, what):
    return f"{alg.name}.{what}" if alg.name else what


# ---------------------------------------------------------------------------
# derivation extension


def derivation_extension(alg: HomNambuAlgebra, D: Matrix) -> HomNambuAlgebra:
    """g ⊕ K·D with [x + mD, y + nD] = [x, y] + m D(y) - n D(x).

    The adjoined generator is the last basis vector; the twist is
    ``[[alpha, 0], [0, 1]]``.  Whether the result is Hom-Leibniz is for the
    caller to check.
    """
    if alg.arity != 2:
        raise ArityMismatch("derivation extensions are defined for binary brackets")
    d = alg.dim
    if D.shape != (d, d):
        raise DimMismatch("D must be an endomorphism of g")
    alpha = alg.alpha
    if D @ alpha != alpha @ D:
        raise TwistCommutationFailure("D does not commute with alpha")
    consts = list(alg.bracket.items())
    for j in range(d):
        for i in range(d):
            c = D[i, j]
            if c:
                consts.append(((d, j, i), c))
                consts.append(((j, d, i), -c))
    bracket = BracketTensor(d + 1, 2, consts)
    rows = [list(alpha.row(r)) + [0] for r in range(d)] + [[0] * d + [1]]
    return HomNambuAlgebra(bracket, (Matrix.from_rows(rows),), _derived_name(alg, "ext"))


# ---------------------------------------------------------------------------
# multilinear calculus


def compose_omega(omega: MultiLinearMap, parts: Sequence[MultiLinearMap]) -> MultiLinearMap:
    """sigma(a_1..a_n) = omega(omega_1(first n_1 args), ..., omega_k(last n_k args))."""
    if len(parts) != omega.arity:
        raise ArityMismatch(f"{len(parts)} parts for a {omega.arity}-linear omega")
    for t, (p, d) in enumerate(zip(parts, omega.source_dims)):
        if p.target_dim != d:
            raise DimMismatch(f"part {t} lands in dim {p.target_dim}, omega expects {d}")
    source = tuple(d for p in parts for d in p.source_dims)
    cuts = []
    start = 0
    for p in parts:
        cuts.append((start, start + p.arity))
        start += p.arity

    def value(ix):
        return omega.apply_sparse([p.value(ix[a:b]) for p, (a, b) in zip(parts, cuts)])

    return MultiLinearMap.from_function(source, omega.target_dim, value)


def identity_map(d: int) -> MultiLinearMap:
    """The identity as a 1-linear map."""
    return MultiLinearMap((d,), d, {(i, i): 1 for i in range(d)})


def mu_map(omega: MultiLinearMap, i: int, k: int, alpha: Matrix) -> MultiLinearMap:
    """mu_i(a_1⊗..⊗a_n, b_1⊗..⊗b_n) = alpha^k a_1 ⊗..⊗ omega(a_i, b_1..b_n) ⊗..⊗ alpha^k a_n.

    ``omega`` is (n+1)-linear on a d-dim space; ``i`` is 1-based.
    """
    n = omega.arity - 1
    d = omega.target_dim
    if any(s != d for s in omega.source_dims):
        raise DimMismatch("omega must be an endo-multilinear map")
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"position {i} outside 1..{n}")
    ak = alpha.power(k).sparse_columns
    space = TensorPowerSpace(d, n)
    table = {}
    for A in space.basis():
        for B in space.basis():
            factors = [ak[a] for a in A]
            factors[i - 1] = omega.value((A[i - 1],) + B)
            out = tensor_sparse(factors, d)
            if out:
                table[(space.index(A), space.index(B))] = out
    N = space.total_dim
    return MultiLinearMap.from_table((N, N), N, table)


def lift_phi(f: Matrix, n: int) -> Matrix:
    """sum over positions of id ⊗ .. ⊗ f ⊗ .. ⊗ id on the n-th tensor power."""
    if not f.is_square:
        raise DimMismatch("f must be square")
    d = f.rows
    eye = Matrix.identity(d)
    total = Matrix.zeros(d ** n)
    for pos in range(n):
        term = Matrix.identity(1)
        for t in range(n):
            term = term.kron(f if t == pos else eye)
        total = total + term
    return total


# ---------------------------------------------------------------------------
# tensor-power brackets


def _tensor_bracket(alg: HomNambuAlgebra, outer: Matrix | None) -> BracketTensor:
    """sum_i outer(a_1)⊗..⊗[a_i, b_1..b_n]⊗..⊗outer(a_n); outer=None means identity."""
    n = alg.arity - 1
    d = alg.dim
    br = alg.bracket
    space = TensorPowerSpace(d, n)
    if outer is None:
        spect = [{j: Q(1)} for j in range(d)]
    else:
        spect = list(outer.sparse_columns)
    table = {}
    for A in space.basis():
        for B in space.basis():
            total: dict = {}
            for i in range(n):
                factors = [spect[a] for a in A]
                factors[i] = br.value((A[i],) + B)
                sparse_axpy(total, 1, tensor_sparse(factors, d))
            if total:
                table[(space.index(A), space.index(B))] = total
    N = space.total_dim
    return BracketTensor.from_map(MultiLinearMap.from_table((N, N), N, table))


def tensor_leibniz(alg: HomNambuAlgebra, verify: bool = True) -> Built:
    """Untwisted bracket on g^⊗n from an (n+1)-ary algebra; identity twist."""
    bracket = _tensor_bracket(alg, None)
    out = HomNambuAlgebra.untwisted(bracket, _derived_name(alg, "tensor"))
    verdicts = {"hom-nambu": verify_hom_nambu(out)} if verify else {}
    return Built(out, verdicts)


def tensor_hom_leibniz(alg: HomNambuAlgebra, verify: bool = True) -> Built:
    """alpha-twisted bracket on g^⊗n with twist alpha^⊗n; needs a multiplicative input."""
    if not alg.multiplicative_flag:
        raise NotMultiplicative(alg.name)
    n = alg.arity - 1
    bracket = _tensor_bracket(alg, alg.alpha)
    out = HomNambuAlgebra(bracket, (kron_power(alg.alpha, n),), _derived_name(alg, "tensor_hom"))
    verdicts = {}
    if verify:
        verdicts = {"hom-nambu": verify_hom_nambu(out),
                    "multiplicative": verify_multiplicative(out)}
    return Built(out, verdicts)


def tensor_power_nary(alg: HomNambuAlgebra, k: int, n: int, verify: bool = True) -> Built:
    """(n+1)-ary bracket on g^⊗k from a (kn+1)-ary algebra.

    The j-th summand puts [x_0j, x_11, .., x_1k, .., x_n1, .., x_nk] in factor
    j and alpha on the other k-1 factors of the first argument.  The trailing
    kn arguments are taken in lexicographic order (row by row).
    """
    if k < 1 or n < 1 or alg.arity != k * n + 1:
        raise ArityMismatch(f"arity {alg.arity} is not k*n+1 for k={k}, n={n}")
    if not alg.twists_equal:
        raise NotMultiplicative("tensor powers need a single twist alpha")
    d = alg.dim
    alpha = alg.alpha
    acol = alpha.sparse_columns
    br = alg.bracket
    space = TensorPowerSpace(d, k)
    N = space.total_dim
    table = {}
    for X in product(list(space.basis()), repeat=n + 1):
        x0 = X[0]
        tail = tuple(t for Xp in X[1:] for t in Xp)
        total: dict = {}
        for j in range(k):
            factors = [acol[a] for a in x0]
            factors[j] = br.value((x0[j],) + tail)
            sparse_axpy(total, 1, tensor_sparse(factors, d))
        if total:
            table[tuple(space.index(x) for x in X)] = total
    bracket = BracketTensor.from_map(MultiLinearMap.from_table((N,) * (n + 1), N, table))
    twist = kron_power(alpha, k)
    out = HomNambuAlgebra(bracket, (twist,) * n, _derived_name(alg, f"power{k}x{n}"))
    verdicts = {"hom-nambu": verify_hom_nambu(out)} if verify else {}
    return Built(out, verdicts)

