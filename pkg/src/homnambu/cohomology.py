"""Representations, the extension H = M ⊕ g, cocycles, coboundaries and Ext.

Coordinates
-----------
* H = M ⊕ g: M coordinates first (0..m-1), then g (m..m+d-1).
* A cochain f: g^⊗n -> M has coordinate index ``j * d**n + L(i_1..i_n)``
  (M coordinate most significant, L the row-major multi-index).
* A map h: g -> M is an m x d matrix; as unknowns it is flattened row-major.
* Hom(g, M) for the tensor-power representation uses the same flattening.

The twist on H is alpha on g and the identity on M, in every slot.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .algebra import (
    DEFAULT_WITNESS_CAP,
    BracketTensor,
    HomNambuAlgebra,
    IdentityReport,
    MultiLinearMap,
    WitnessCollector,
    hom_nambu_sides,
)
from .constructions import tensor_hom_leibniz, tensor_leibniz
from .errors import ArityMismatch, DimMismatch, NotACocycle, NotARepresentation
from .exact import (
    Matrix,
    Q,
    from_sparse,
    linearize,
    matrix_rows_sparse,
    nullspace_of_rows,
    quotient_dimension,
    rank_and_image,
    solve,
    sparse_axpy,
)


@dataclass
class Representation:
    """Module M with one action per position of the M argument.

    ``actions[p]`` is the multilinear map g^⊗p ⊗ M ⊗ g^⊗(n-1-p) -> M.
    """

    algebra_dim: int
    module_dim: int
    actions: tuple
    name: str = ""

    def __post_init__(self):
        self.actions = tuple(self.actions)
        n = len(self.actions)
        d, m = self.algebra_dim, self.module_dim
        for p, act in enumerate(self.actions):
            want = tuple(m if t == p else d for t in range(n))
            if act.source_dims != want or act.target_dim != m:
                raise DimMismatch(f"action {p} has type {act.source_dims}->{act.target_dim}")

    @property
    def arity(self) -> int:
        return len(self.actions)

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return (self.algebra_dim, self.module_dim, self.actions) == (
            other.algebra_dim, other.module_dim, other.actions)


def trivial_module(alg: HomNambuAlgebra, m: int = 1) -> Representation:
    d, n = alg.dim, alg.arity
    acts = [MultiLinearMap(tuple(m if t == p else d for t in range(n)), m) for p in range(n)]
    return Representation(d, m, acts, f"trivial({m})")


def adjoint_module(alg: HomNambuAlgebra) -> Representation:
    """M = g acting through the bracket in every position."""
    return Representation(alg.dim, alg.dim, [alg.bracket] * alg.arity, "adjoint")


def functional_module(alg: HomNambuAlgebra, functional: Sequence, position: int,
                      name: str = "") -> Representation:
    """1-dim module where only the action at ``position`` is nonzero.

    For a binary algebra: position 0 gives [mu, x] = lambda(x) mu, position 1
    gives [x, mu] = lambda(x) mu.
    """
    if alg.arity != 2:
        raise ArityMismatch("functional modules are built for binary algebras")
    d = alg.dim
    acts = []
    for p in range(2):
        dims = (1, d) if p == 0 else (d, 1)
        consts = {}
        if p == position:
            for i, c in enumerate(functional):
                key = (0, i, 0) if p == 0 else (i, 0, 0)
                consts[key] = c
        acts.append(MultiLinearMap(dims, 1, consts))
    return Representation(d, 1, acts, name or f"functional@{position + 1}")


# ---------------------------------------------------------------------------
# the extension H = M ⊕ g


def cochain_dim(alg: HomNambuAlgebra, rep: Representation) -> int:
    return rep.module_dim * alg.dim ** alg.arity


def cochain_from_vector(v: Sequence, alg: HomNambuAlgebra, rep: Representation) -> MultiLinearMap:
    d, n, m = alg.dim, alg.arity, rep.module_dim
    N = d ** n
    if len(v) != m * N:
        raise DimMismatch(f"cochain vector of length {len(v)}, expected {m * N}")
    consts = {}
    for idx, x in enumerate(v):
        if x:
            j, rest = divmod(idx, N)
            ix = []
            for _ in range(n):
                rest, t = divmod(rest, d)
                ix.append(t)
            consts[tuple(reversed(ix)) + (j,)] = x
    return MultiLinearMap((d,) * n, m, consts)


def cochain_to_vector(f: MultiLinearMap, alg: HomNambuAlgebra, rep: Representation) -> tuple:
    d, n, m = alg.dim, alg.arity, rep.module_dim
    _check_cochain(f, alg, rep)
    N = d ** n
    v = [Q(0)] * (m * N)
    for key, c in f.items():
        *ix, j = key
        v[j * N + linearize(ix, d)] = c
    return tuple(v)


def _check_cochain(f, alg, rep):
    if f.source_dims != (alg.dim,) * alg.arity or f.target_dim != rep.module_dim:
        raise DimMismatch("cochain has the wrong type")


def _check_rep(alg, rep):
    if rep.algebra_dim != alg.dim or rep.arity != alg.arity:
        raise DimMismatch("representation does not match the algebra")


def _extension(alg: HomNambuAlgebra, rep: Representation,
               f: MultiLinearMap | None = None) -> HomNambuAlgebra:
    _check_rep(alg, rep)
    d, n, m = alg.dim, alg.arity, rep.module_dim
    consts = []
    for ix, out in alg.bracket.table.items():
        key = tuple(m + i for i in ix)
        consts.extend((key + (m + j,), c) for j, c in out.items())
    if f is not None:
        _check_cochain(f, alg, rep)
        for ix, out in f.table.items():
            key = tuple(m + i for i in ix)
            consts.extend((key + (j,), c) for j, c in out.items())
    for p, act in enumerate(rep.actions):
        for ix, out in act.table.items():
            key = tuple(i if t == p else m + i for t, i in enumerate(ix))
            consts.extend((key + (j,), c) for j, c in out.items())
    bracket = BracketTensor(m + d, n, consts)
    twists = []
    for a in alg.twists:
        rows = [[1 if c == r else 0 for c in range(m)] + [0] * d for r in range(m)]
        rows += [[0] * m + list(a.row(r)) for r in range(d)]
        twists.append(Matrix.from_rows(rows))
    return HomNambuAlgebra(bracket, twists, f"{alg.name}+{rep.name}")


def verify_representation(alg: HomNambuAlgebra, rep: Representation,
                          witness_cap: int = DEFAULT_WITNESS_CAP) -> IdentityReport:
    """The fundamental identity with exactly one argument in M, for every placement.

    Witness index tuples are ``(placement, indices...)`` with the M argument's
    index given in M coordinates; placement counts x_1..x_n then y_1..y_{n-1}
    from 0.
    """
    H = _extension(alg, rep)
    d, n, m = alg.dim, alg.arity, rep.module_dim
    twisted = [list(a.sparse_columns) for a in H.twists]
    col = WitnessCollector(witness_cap, False)
    for place in range(2 * n - 1):
        ranges = [range(m) if t == place else range(m, m + d) for t in range(2 * n - 1)]
        for ix in product(*ranges):
            left, right = hom_nambu_sides(H.bracket, twisted, ix[:n], ix[n:])
            natural = tuple(i if t == place else i - m for t, i in enumerate(ix))
            col.record((place,) + natural, left, right, m)
    return col.report("representation")


def _require_rep(alg, rep):
    rep_ok = verify_representation(alg, rep, witness_cap=1)
    if not rep_ok.holds:
        raise NotARepresentation(f"{rep.name or 'module'} fails at {rep_ok.witnesses[0][0]}")


def semidirect_algebra(alg: HomNambuAlgebra, rep: Representation,
                       f: MultiLinearMap | None = None, check: bool = True) -> HomNambuAlgebra:
    """H = M ⊕ g with [(m_i, x_i)] = (sum_i [x_1..m_i..x_n] + f(x), [x])."""
    if check:
        _require_rep(alg, rep)
    return _extension(alg, rep, f)


# ---------------------------------------------------------------------------
# cocycles


def _cocycle_terms(alg, rep, f, xs, ys, twisted):
    """Both sides of the cocycle condition for one basis (2n-1)-tuple."""
    br = alg.bracket
    acts = rep.actions
    n = alg.arity
    ty = [twisted[t][y] for t, y in enumerate(ys)]
    left = f.apply_sparse([br.value(xs)] + ty)
    sparse_axpy(left, 1, acts[0].apply_sparse([f.value(xs)] + ty))
    right: dict = {}
    for i in range(n):
        args = [twisted[j][xs[j]] if j < i else twisted[j - 1][xs[j]] if j > i else None
                for j in range(n)]
        inner = (xs[i],) + tuple(ys)
        args[i] = br.value(inner)
        sparse_axpy(right, 1, f.apply_sparse(args))
        args[i] = f.value(inner)
        sparse_axpy(right, 1, acts[i].apply_sparse(args))
    return left, right


def cocycle_residual(alg: HomNambuAlgebra, rep: Representation, f: MultiLinearMap,
                     witness_cap: int = DEFAULT_WITNESS_CAP, check: bool = True) -> IdentityReport:
    """Evaluate the cocycle condition on every basis (2n-1)-tuple."""
    if check:
        _require_rep(alg, rep)
    _check_cochain(f, alg, rep)
    n, d, m = alg.arity, alg.dim, rep.module_dim
    twisted = [list(a.sparse_columns) for a in alg.twists]
    col = WitnessCollector(witness_cap, False)
    for ix in product(range(d), repeat=2 * n - 1):
        left, right = _cocycle_terms(alg, rep, f, ix[:n], ix[n:], twisted)
        col.record(ix, left, right, m)
    return col.report("cocycle")


def cocycle_constraint_rows(alg: HomNambuAlgebra, rep: Representation) -> dict:
    """Rows of the linear system (left - right = 0) over cochain coordinates.

    Returned as ``{(tuple index, M coordinate): sparse row}`` for every row
    that is not identically zero.  Assembled term by term, independently of
    :func:`cocycle_residual`.
    """
    n, d, m = alg.arity, alg.dim, rep.module_dim
    N = d ** n
    br = alg.bracket
    acts = rep.actions
    twisted = [list(a.sparse_columns) for a in alg.twists]
    unit_m = [{j: Q(1)} for j in range(m)]
    rows: dict = {}

    def add(t, out_j, unknown, coeff):
        row = rows.setdefault((t, out_j), {})
        v = row.get(unknown, 0) + coeff
        if v:
            row[unknown] = v
        else:
            row.pop(unknown, None)

    def f_term(t, args, sign):
        # f(args) = sum over basis tuples of coeff * f(ix)
        for combo in product(*(list(a.items()) for a in args)):
            ix = tuple(i for i, _ in combo)
            c = Q(sign)
            for _, x in combo:
                c *= x
            L = linearize(ix, d)
            for j in range(m):
                add(t, j, j * N + L, c)

    def act_term(t, p, args, z, sign):
        # acts[p](args with f(e_z) in slot p)
        L = linearize(z, d)
        for j in range(m):
            a = list(args)
            a[p] = unit_m[j]
            for o, c in acts[p].apply_sparse(a).items():
                add(t, o, j * N + L, sign * c)

    for t, ix in enumerate(product(range(d), repeat=2 * n - 1)):
        xs, ys = ix[:n], ix[n:]
        ty = [twisted[s][y] for s, y in enumerate(ys)]
        f_term(t, [br.value(xs)] + ty, 1)
        act_term(t, 0, [None] + ty, xs, 1)
        for i in range(n):
            args = [twisted[j][xs[j]] if j < i else twisted[j - 1][xs[j]] if j > i else None
                    for j in range(n)]
            inner = (xs[i],) + tuple(ys)
            args[i] = br.value(inner)
            f_term(t, args, -1)
            args[i] = None
            act_term(t, i, args, inner, -1)
    return {k: r for k, r in rows.items() if r}


def cocycle_space(alg: HomNambuAlgebra, rep: Representation, check: bool = True) -> list:
    """Basis of Z(g, M) as cochain coordinate vectors."""
    if check:
        _require_rep(alg, rep)
    rows = cocycle_constraint_rows(alg, rep)
    return nullspace_of_rows((rows[k] for k in sorted(rows)), cochain_dim(alg, rep))


# ---------------------------------------------------------------------------
# coboundaries


def coboundary(alg: HomNambuAlgebra, rep: Representation, h: Matrix,
               check: bool = True) -> MultiLinearMap:
    """(delta h)(x_1..x_n) = sum_i [x_1, .., h(x_i), .., x_n] - h([x_1..x_n])."""
    if check:
        _require_rep(alg, rep)
    _check_rep(alg, rep)
    d, n, m = alg.dim, alg.arity, rep.module_dim
    if h.shape != (m, d):
        raise DimMismatch(f"h must be {m}x{d}")
    hc = h.sparse_columns
    units = [{i: Q(1)} for i in range(d)]

    def value(ix):
        out = {k: -v for k, v in h.apply_sparse(alg.bracket.value(ix)).items()}
        for i in range(n):
            args = [units[a] for a in ix]
            args[i] = hc[ix[i]]
            sparse_axpy(out, 1, rep.actions[i].apply_sparse(args))
        return out

    return MultiLinearMap.from_function((d,) * n, m, value)


def _hom_basis(m, d):
    for r in range(m):
        for c in range(d):
            yield Matrix.from_flat([1 if k == r * d + c else 0 for k in range(m * d)], m, d)


def coboundary_matrix(alg: HomNambuAlgebra, rep: Representation) -> Matrix:
    """Matrix of h -> delta h from flattened h to cochain coordinates."""
    m, d = rep.module_dim, alg.dim
    cols = [cochain_to_vector(coboundary(alg, rep, E, check=False), alg, rep)
            for E in _hom_basis(m, d)]
    return Matrix.from_columns(cols, cochain_dim(alg, rep))


def _commuting_rows(alg, m):
    """Rows of h∘alpha_t - h = 0 over flattened h, for every twist."""
    d = alg.dim
    rows = []
    for a in alg.twists:
        for r in range(m):
            for q in range(d):
                row: dict = {}
                for c in range(d):
                    if a[c, q]:
                        row[r * d + c] = row.get(r * d + c, 0) + a[c, q]
                row[r * d + q] = row.get(r * d + q, 0) - 1
                rows.append({k: v for k, v in row.items() if v})
    return rows


def coboundary_space(alg: HomNambuAlgebra, rep: Representation, check: bool = True,
                     commuting_only: bool = False) -> list:
    """Basis of B(g, M): the image of h -> delta h.

    With ``commuting_only`` the domain is restricted to h with h∘alpha = h.
    """
    if check:
        _require_rep(alg, rep)
    A = coboundary_matrix(alg, rep)
    if commuting_only:
        dom = nullspace_of_rows(_commuting_rows(alg, rep.module_dim), A.cols)
        if not dom:
            return []
        A = A @ Matrix.from_columns(dom, A.cols)
    _, image = rank_and_image(A)
    return [tuple(v) for v in image]


@dataclass
class CochainSpaces:
    z_basis: list
    b_basis: list
    ext_dim: int

    @property
    def z_dim(self) -> int:
        return len(self.z_basis)

    @property
    def b_dim(self) -> int:
        return len(self.b_basis)


def cochain_spaces(alg: HomNambuAlgebra, rep: Representation, check: bool = True) -> CochainSpaces:
    if check:
        _require_rep(alg, rep)
    Z = cocycle_space(alg, rep, check=False)
    B = coboundary_space(alg, rep, check=False)
    return CochainSpaces(Z, B, quotient_dimension(Z, B))


def ext_dimension(alg: HomNambuAlgebra, rep: Representation, check: bool = True) -> int:
    return cochain_spaces(alg, rep, check).ext_dim


def split_check(alg: HomNambuAlgebra, rep: Representation, f: MultiLinearMap,
                check: bool = True):
    """A map h: g -> M with delta h = f and h∘alpha = h, or None.

    The returned h is the least-index solution (free unknowns set to zero).
    """
    if check:
        _require_rep(alg, rep)
    if not cocycle_residual(alg, rep, f, witness_cap=1, check=False).holds:
        raise NotACocycle("f does not satisfy the cocycle condition")
    m, d = rep.module_dim, alg.dim
    A = coboundary_matrix(alg, rep)
    target = cochain_to_vector(f, alg, rep)
    rows = [dict(r) for r in matrix_rows_sparse(A)]
    rhs = list(target)
    for r in _commuting_rows(alg, m):
        rows.append(r)
        rhs.append(Q(0))
    M = Matrix.from_rows([from_sparse(r, A.cols) for r in rows], A.cols)
    sol = solve(M, rhs)
    if sol is None:
        return None
    return Matrix.from_flat(sol, m, d)


# ---------------------------------------------------------------------------
# Hom(g, M) as a representation of the tensor-power Leibniz algebra


@dataclass
class HomRepresentationResult:
    representation: Representation
    algebra: HomNambuAlgebra
    report: IdentityReport


def hom_gm_representation(alg: HomNambuAlgebra, rep: Representation,
                          variant: str = "plain") -> HomRepresentationResult:
    """Action of g^⊗n on Hom(g, M): [F, X](x) = [X, F](x) = -[F(x), x_1, .., x_n].

    ``variant`` selects the bracket on g^⊗n: "plain" (untwisted, identity
    twist) or "hom" (alpha-twisted, twist alpha^⊗n).
    """
    if alg.arity < 2:
        raise ArityMismatch("need an (n+1)-ary algebra with n >= 1")
    _check_rep(alg, rep)
    _require_rep(alg, rep)
    if variant == "plain":
        tensor = tensor_leibniz(alg, verify=False).algebra
    elif variant == "hom":
        tensor = tensor_hom_leibniz(alg, verify=False).algebra
    else:
        raise ValueError(f"unknown variant {variant!r}")
    d, m = alg.dim, rep.module_dim
    n = alg.arity - 1
    N = d ** n
    md = m * d
    rho0 = rep.actions[0]
    left, right = [], []
    for r in range(m):
        for X in product(range(d), repeat=n):
            L = linearize(X, d)
            for rp, c in rho0.value((r,) + X).items():
                for col in range(d):
                    left.append(((r * d + col, L, rp * d + col), -c))
                    right.append(((L, r * d + col, rp * d + col), -c))
    acts = [MultiLinearMap((md, N), md, left), MultiLinearMap((N, md), md, right)]
    module = Representation(N, md, acts, f"Hom(g,{rep.name})")
    return HomRepresentationResult(module, tensor, verify_representation(tensor, module))
