"""alpha^k-derivations, omega-derivations, the graded Der(g) and inner derivations.

A derivation space is the exact kernel of one linear system in the d*d
entries of an unknown matrix D (row-major, D[r, c] at index r*d + c):

* D∘alpha - alpha∘D = 0
* D(omega(e_i1..e_in)) - sum_t omega(alpha^k e_i1, .., D e_it, .., alpha^k e_in) = 0

for every basis tuple.  The basis is whatever :func:`exact.nullspace` returns,
so it is canonical.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .algebra import (
    DEFAULT_WITNESS_CAP,
    HomNambuAlgebra,
    IdentityReport,
    MultiLinearMap,
    WitnessCollector,
)
from .errors import DimMismatch, NotADerivation, NotASubspace, NotFixedPoint, NotMultiplicative
from .exact import (
    Echelon,
    Matrix,
    Q,
    coordinates_in,
    independent_subset,
    nullspace,
    nullspace_of_rows,
    sparse_axpy,
    to_sparse,
)

DEFAULT_K_MAX = 3


@dataclass
class DerivationBasis:
    degree: int
    basis: list
    alpha: Matrix
    omega: MultiLinearMap
    name: str = ""

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def dim(self) -> int:
        return self.alpha.rows

    def flat(self) -> list:
        return [m.entries for m in self.basis]

    def contains(self, m: Matrix) -> bool:
        ech = Echelon(self.dim ** 2)
        for v in self.flat():
            ech.add(to_sparse(v))
        return ech.contains(to_sparse(m.entries))

    def coordinates(self, m: Matrix):
        return coordinates_in(m.entries, self.flat())


def omega_derivation_report(f: Matrix, omega: MultiLinearMap, alpha: Matrix, k: int,
                            witness_cap: int = DEFAULT_WITNESS_CAP,
                            stop_early: bool = True) -> IdentityReport:
    """Direct check of the omega-alpha^k-derivation conditions for one map."""
    d = omega.target_dim
    if any(s != d for s in omega.source_dims) or f.shape != (d, d) or alpha.shape != (d, d):
        raise DimMismatch("f, alpha and omega must act on one space")
    col = WitnessCollector(witness_cap, stop_early)
    fa, af = f @ alpha, alpha @ f
    if fa != af:
        col.failed = True
        col.witnesses.append((("commute",), fa.entries, af.entries))
    ak = alpha.power(k).sparse_columns
    fc = f.sparse_columns
    for ix in product(range(d), repeat=omega.arity):
        left = f.apply_sparse(omega.value(ix))
        right: dict = {}
        for i in range(omega.arity):
            args = [ak[a] for a in ix]
            args[i] = fc[ix[i]]
            sparse_axpy(right, 1, omega.apply_sparse(args))
        if col.record(ix, left, right, d):
            break
    return col.report("omega-derivation")


def is_omega_derivation(f: Matrix, omega: MultiLinearMap, alpha: Matrix, k: int) -> bool:
    return omega_derivation_report(f, omega, alpha, k, witness_cap=1).holds


def is_derivation(D: Matrix, alg: HomNambuAlgebra, k: int) -> bool:
    return is_omega_derivation(D, alg.bracket, alg.alpha, k)


def _constraint_rows(omega: MultiLinearMap, alpha: Matrix, k: int) -> list:
    d = omega.target_dim
    n = omega.arity
    ak = alpha.power(k).sparse_columns
    columns = []  # one sparse residual per unknown E_rc
    tuples = list(product(range(d), repeat=n))
    offset = d * d
    for r in range(d):
        for c in range(d):
            col: dict = {}
            # (E alpha - alpha E)[p, q] = delta_pr alpha[c, q] - alpha[p, r] delta_cq
            for q in range(d):
                if alpha[c, q]:
                    sparse_axpy(col, alpha[c, q], {r * d + q: Q(1)})
            for p in range(d):
                if alpha[p, r]:
                    sparse_axpy(col, -alpha[p, r], {p * d + c: Q(1)})
            er = {r: Q(1)}
            for t, ix in enumerate(tuples):
                res: dict = {}
                x = omega.value(ix).get(c)
                if x:
                    res[r] = x
                for i, a in enumerate(ix):
                    if a != c:
                        continue
                    args = [ak[b] for b in ix]
                    args[i] = er
                    sparse_axpy(res, -1, omega.apply_sparse(args))
                base = offset + t * d
                for j, v in res.items():
                    col[base + j] = v
            columns.append(col)
    rows: dict = {}
    for u, col in enumerate(columns):
        for row, v in col.items():
            rows.setdefault(row, {})[u] = v
    return [rows[key] for key in sorted(rows)]


def omega_derivation_space(A_dim: int, omega: MultiLinearMap, alpha: Matrix, k: int,
                           name: str = "") -> DerivationBasis:
    """Basis of Der^omega_{alpha^k} on a bare A_dim-dimensional space."""
    if omega.target_dim != A_dim or any(s != A_dim for s in omega.source_dims):
        raise DimMismatch("omega must be an endo-multilinear map of the given space")
    if alpha.shape != (A_dim, A_dim):
        raise DimMismatch("alpha must be an endomorphism of the space")
    vecs = nullspace_of_rows(_constraint_rows(omega, alpha, k), A_dim * A_dim)
    basis = [Matrix.from_flat(v, A_dim, A_dim) for v in vecs]
    return DerivationBasis(k, basis, alpha, omega, name)


def derivation_space(alg: HomNambuAlgebra, k: int) -> DerivationBasis:
    if not alg.multiplicative_flag:
        raise NotMultiplicative(alg.name)
    space = omega_derivation_space(alg.dim, alg.bracket, alg.alpha, k, alg.name)
    for D in space.basis:
        if not is_derivation(D, alg, k):
            raise NotADerivation("nullspace vector failed the direct derivation test")
    return space


def commutator(D: Matrix, E: Matrix, k: int = 0, s: int = 0,
               space: DerivationBasis | None = None) -> tuple:
    """([D, E], k + s); with ``space`` given, membership in it is enforced."""
    if D.shape != E.shape or not D.is_square:
        raise DimMismatch("commutator needs two square matrices of one size")
    C = D @ E - E @ D
    if space is not None:
        if space.degree != k + s:
            raise ValueError(f"space has degree {space.degree}, commutator has {k + s}")
        if not space.contains(C):
            raise NotASubspace(f"commutator of degrees {k}, {s} left Der_(alpha^{k + s})")
    return C, k + s


# ---------------------------------------------------------------------------
# graded Der(g)


@dataclass
class GradedDerivationAlgebra:
    """Der_{alpha^0} ⊕ ... ⊕ Der_{alpha^K} in concatenated coordinates.

    ``bracket_table[(a, b)]`` holds the commutator of basis elements a and b
    as sparse concatenated coordinates, or is absent when the degrees add up
    beyond ``k_max``.  ``twist_table[a]`` is D_a∘alpha in degree deg(a)+1.
    """

    k_max: int
    spaces: list
    offsets: list
    degrees: list  # degree of each concatenated basis element
    bracket_table: dict = field(default_factory=dict)
    twist_table: dict = field(default_factory=dict)
    additivity_failures: list = field(default_factory=list)
    out_of_truncation: int = 0

    @property
    def total_dim(self) -> int:
        return len(self.degrees)

    def element(self, a: int) -> Matrix:
        deg = self.degrees[a]
        return self.spaces[deg].basis[a - self.offsets[deg]]

    def twist_matrix(self) -> Matrix:
        """alpha' in concatenated coordinates; columns of top-degree elements are zero."""
        N = self.total_dim
        cols = []
        for a in range(N):
            v = [Q(0)] * N
            for i, x in self.twist_table.get(a, {}).items():
                v[i] = x
            cols.append(v)
        return Matrix.from_columns(cols, N)

    def bracket(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for a, x in u.items():
            for b, y in v.items():
                img = self.bracket_table.get((a, b))
                if img is None:
                    if self.degrees[a] + self.degrees[b] > self.k_max:
                        raise ValueError("bracket out of truncation")
                    continue
                sparse_axpy(out, x * y, img)
        return out

    def _twist(self, a: int) -> dict:
        return self.twist_table[a]

    def hom_lie_report(self, witness_cap: int = DEFAULT_WITNESS_CAP) -> IdentityReport:
        """Antisymmetry and Hom-Jacobi with alpha'(D) = D∘alpha on in-range basis triples."""
        N = self.total_dim
        deg = self.degrees
        col = WitnessCollector(witness_cap, False)
        flagged = 0
        for a, b in product(range(N), repeat=2):
            if deg[a] + deg[b] > self.k_max:
                flagged += 1
                continue
            left = self.bracket({a: Q(1)}, {b: Q(1)})
            right = {i: -x for i, x in self.bracket({b: Q(1)}, {a: Q(1)}).items()}
            col.record((a, b), left, right, N)
        for a, b, c in product(range(N), repeat=3):
            if deg[a] + deg[b] + deg[c] + 1 > self.k_max:
                flagged += 1
                continue
            total: dict = {}
            for p, q, r in ((a, b, c), (b, c, a), (c, a, b)):
                inner = self.bracket({q: Q(1)}, {r: Q(1)})
                sparse_axpy(total, 1, self.bracket(self._twist(p), inner))
            col.record((a, b, c), total, {}, N)
        rep = col.report("der-hom-lie")
        rep.flagged = flagged
        return rep


def assemble_der_algebra(alg: HomNambuAlgebra, k_max: int = DEFAULT_K_MAX) -> GradedDerivationAlgebra:
    if not alg.multiplicative_flag:
        raise NotMultiplicative(alg.name)
    if k_max < 0:
        raise ValueError("k_max must be non-negative")
    spaces = [derivation_space(alg, k) for k in range(k_max + 1)]
    offsets, degrees = [], []
    for sp in spaces:
        offsets.append(len(degrees))
        degrees.extend([sp.degree] * sp.dimension)
    gda = GradedDerivationAlgebra(k_max, spaces, offsets, degrees)

    def coords(m: Matrix, deg: int):
        c = spaces[deg].coordinates(m)
        if c is None:
            return None
        return {offsets[deg] + i: x for i, x in enumerate(c) if x}

    N = len(degrees)
    for a, b in product(range(N), repeat=2):
        ka, kb = degrees[a], degrees[b]
        if ka + kb > k_max:
            gda.out_of_truncation += 1
            continue
        C, deg = commutator(gda.element(a), gda.element(b), ka, kb)
        c = coords(C, deg)
        if c is None:
            gda.additivity_failures.append((a, b))
            continue
        gda.bracket_table[(a, b)] = c
    alpha = alg.alpha
    for a in range(N):
        deg = degrees[a] + 1
        if deg > k_max:
            continue
        c = coords(gda.element(a) @ alpha, deg)
        if c is None:
            raise NotASubspace(f"D∘alpha of element {a} left degree {deg}")
        gda.twist_table[a] = c
    return gda


# ---------------------------------------------------------------------------
# inner derivations


@dataclass
class InnerBasis:
    degree: int
    generators: list  # (argument index tuple, matrix); arguments are fixed-space basis vectors
    fixed_basis: list
    basis: list

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def contains(self, m: Matrix) -> bool:
        if not self.basis:
            return m.is_zero()
        ech = Echelon(len(m.entries))
        for b in self.basis:
            ech.add(to_sparse(b.entries))
        return ech.contains(to_sparse(m.entries))


def inner_derivation(alg: HomNambuAlgebra, k: int, args: Sequence, check: bool = True) -> Matrix:
    """ad_k(x)(y) = [alpha^k(y), x_1, ..., x_{n-1}] for alpha-fixed x_i."""
    if len(args) != alg.arity - 1:
        raise DimMismatch(f"{len(args)} arguments, expected {alg.arity - 1}")
    alpha = alg.alpha
    xs = [to_sparse(x) for x in args]
    for t, x in enumerate(xs):
        if alpha.apply_sparse(x) != x:
            raise NotFixedPoint(f"argument {t + 1} is not fixed by alpha")
    ak = alg.alpha_power(k).sparse_columns
    d = alg.dim
    cols = []
    for j in range(d):
        out = alg.bracket.apply_sparse([ak[j]] + xs)
        v = [Q(0)] * d
        for i, x in out.items():
            v[i] = x
        cols.append(v)
    ad = Matrix.from_columns(cols, d)
    if check and not is_derivation(ad, alg, k + 1):
        raise NotADerivation(f"ad_{k} is not an alpha^{k + 1}-derivation")
    return ad


def fixed_subspace(alpha: Matrix) -> list:
    return nullspace(alpha - Matrix.identity(alpha.rows))


def inner_space(alg: HomNambuAlgebra, k: int) -> InnerBasis:
    if not alg.multiplicative_flag:
        raise NotMultiplicative(alg.name)
    fixed = fixed_subspace(alg.alpha)
    gens = []
    for combo in product(range(len(fixed)), repeat=alg.arity - 1):
        ad = inner_derivation(alg, k, [fixed[i] for i in combo], check=False)
        gens.append((combo, ad))
    keep = independent_subset([m.entries for _, m in gens])
    return InnerBasis(k, gens, fixed, [gens[i][1] for i in keep])


def check_inn_ideal(alg: HomNambuAlgebra, k_max: int = DEFAULT_K_MAX,
                    witness_cap: int = DEFAULT_WITNESS_CAP) -> IdentityReport:
    """[D, ad_k(x)] stays inner and ad_k(x)∘alpha stays inner, on all computed pairs.

    A derivation of degree k' and an inner generator ad_k (degree k+1) have a
    commutator of degree k+k'+1, tested against the span of ad_{k+k'}.
    Pairs whose degree exceeds ``k_max`` are counted in ``flagged``.
    """
    if not alg.multiplicative_flag:
        raise NotMultiplicative(alg.name)
    ders = [derivation_space(alg, k) for k in range(k_max + 1)]
    inner = [inner_space(alg, k) for k in range(k_max + 1)]
    col = WitnessCollector(witness_cap, False)
    flagged = 0
    d2 = alg.dim ** 2
    alpha = alg.alpha
    for k in range(k_max):
        for g, (args, ad) in enumerate(inner[k].generators):
            for kp, space in enumerate(ders):
                for idx, D in enumerate(space.basis):
                    land = k + kp
                    if land + 1 > k_max:
                        flagged += 1
                        continue
                    C = D @ ad - ad @ D
                    ok = inner[land].contains(C)
                    col.record(("bracket", kp, idx, k, g),
                               {} if ok else to_sparse(C.entries), {}, d2)
            if k + 2 > k_max:
                flagged += 1
                continue
            T = ad @ alpha
            ok = inner[k + 1].contains(T)
            col.record(("twist", k, g), {} if ok else to_sparse(T.entries), {}, d2)
    rep = col.report("inn-ideal")
    rep.flagged = flagged
    return rep


def sum_closure_check(f: Matrix, omega: MultiLinearMap, sigma: MultiLinearMap,
                      alpha: Matrix, k: int) -> bool:
    """Is f an (omega + sigma)-alpha^k-derivation?  Tested directly on the sum."""
    return is_omega_derivation(f, omega + sigma, alpha, k)
