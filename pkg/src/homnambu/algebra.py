"""Structure-constant model of n-ary Hom-Nambu algebras and their identity checks.

A bracket is stored sparsely as ``{(i1, ..., in): {j: c}}`` meaning
``[e_i1, ..., e_in] = sum_j c e_j``; evaluation expands arguments over their
supports, so basis inputs cost a dictionary lookup.

All verifiers enumerate basis tuples in ascending row-major order.  By
multilinearity that is a proof, not a sample.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Iterable, Mapping, Sequence

from .errors import ArityMismatch, DimMismatch
from .exact import (
    Matrix,
    Q,
    Echelon,
    as_q,
    from_sparse,
    sparse_axpy,
    to_sparse,
)

DEFAULT_WITNESS_CAP = 10


class MultiLinearMap:
    """Multilinear map V_1 x ... x V_r -> W given by structure constants.

    ``constants`` maps ``(i1, ..., ir, j)`` to a rational; absent keys are 0.
    """

    def __init__(self, source_dims: Sequence[int], target_dim: int,
                 constants: Mapping | Iterable = ()):
        self.source_dims = tuple(int(d) for d in source_dims)
        self.target_dim = int(target_dim)
        items = constants.items() if isinstance(constants, Mapping) else constants
        table: dict = {}
        for key, value in items:
            key = tuple(key)
            if len(key) != self.arity + 1:
                raise ArityMismatch(f"key {key} does not have {self.arity}+1 indices")
            *ix, j = key
            for t, (i, d) in enumerate(zip(ix, self.source_dims)):
                if not 0 <= i < d:
                    raise DimMismatch(f"index {i} out of range in slot {t}")
            if not 0 <= j < self.target_dim:
                raise DimMismatch(f"output index {j} out of range")
            value = as_q(value)
            if value:
                slot = table.setdefault(tuple(ix), {})
                v = slot.get(j, 0) + value
                if v:
                    slot[j] = v
                else:
                    del slot[j]
                    if not slot:
                        del table[tuple(ix)]
        self._table = table

    @classmethod
    def from_table(cls, source_dims, target_dim, table: Mapping) -> "MultiLinearMap":
        """Build from ``{(i1..ir): sparse output}``."""
        return MultiLinearMap(source_dims, target_dim,
                   ((ix + (j,), c) for ix, out in table.items() for j, c in out.items()))

    @classmethod
    def from_function(cls, source_dims, target_dim, fn) -> "MultiLinearMap":
        """Tabulate ``fn(index tuple) -> sparse vector`` over all basis tuples."""
        table = {}
        for ix in product(*(range(d) for d in source_dims)):
            out = fn(ix)
            if out:
                table[ix] = out
        return MultiLinearMap.from_table(source_dims, target_dim, table)

    @classmethod
    def zero(cls, source_dims, target_dim) -> "MultiLinearMap":
        return MultiLinearMap(source_dims, target_dim)

    # ------------------------------------------------------------------
    @property
    def arity(self) -> int:
        return len(self.source_dims)

    @property
    def table(self) -> Mapping:
        return self._table

    def items(self):
        """``((i1..ir, j), c)`` pairs in ascending key order."""
        for ix in sorted(self._table):
            out = self._table[ix]
            for j in sorted(out):
                yield ix + (j,), out[j]

    @property
    def constants(self) -> dict:
        return dict(self.items())

    def value(self, ix: tuple) -> dict:
        """Sparse image of a basis tuple (do not mutate)."""
        return self._table.get(ix, {})

    def apply_sparse(self, args: Sequence[dict]) -> dict:
        out: dict = {}
        table = self._table
        if not table:
            return out
        supports = [list(a.items()) for a in args]
        if any(not s for s in supports):
            return out
        for combo in product(*supports):
            ix = tuple(i for i, _ in combo)
            img = table.get(ix)
            if img is None:
                continue
            coeff = Q(1)
            for _, x in combo:
                coeff *= x
            sparse_axpy(out, coeff, img)
        return out

    def __call__(self, *args) -> tuple:
        if len(args) != self.arity:
            raise ArityMismatch(f"expected {self.arity} arguments, got {len(args)}")
        for a, d in zip(args, self.source_dims):
            if len(a) != d:
                raise DimMismatch(f"argument of length {len(a)} for dimension {d}")
        return from_sparse(self.apply_sparse([to_sparse(a) for a in args]), self.target_dim)

    # linear structure -------------------------------------------------
    def _check_compatible(self, other):
        if (self.source_dims, self.target_dim) != (other.source_dims, other.target_dim):
            raise DimMismatch("multilinear maps of different types")

    def __add__(self, other: "MultiLinearMap") -> "MultiLinearMap":
        self._check_compatible(other)
        return MultiLinearMap(self.source_dims, self.target_dim,
                              list(self.items()) + list(other.items()))

    def scale(self, c) -> "MultiLinearMap":
        c = as_q(c)
        return MultiLinearMap(self.source_dims, self.target_dim,
                              ((k, c * v) for k, v in self.items()))

    def __neg__(self) -> "MultiLinearMap":
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def postcompose(self, m: Matrix) -> "MultiLinearMap":
        """m ∘ self."""
        if m.cols != self.target_dim:
            raise DimMismatch("matrix does not accept the map's outputs")
        return MultiLinearMap.from_table(
            self.source_dims, m.rows,
            {ix: m.apply_sparse(out) for ix, out in self._table.items()})

    def is_zero(self) -> bool:
        return not self._table

    def __eq__(self, other):
        if not isinstance(other, MultiLinearMap):
            return NotImplemented
        return (self.source_dims == other.source_dims
                and self.target_dim == other.target_dim
                and self._table == other._table)

    __hash__ = None

    def __repr__(self):
        return (f"{type(self).__name__}(source_dims={self.source_dims}, "
                f"target_dim={self.target_dim}, nonzero={sum(len(v) for v in self._table.values())})")


class BracketTensor(MultiLinearMap):
    """n-linear bracket g x ... x g -> g on a d-dimensional space."""

    def __init__(self, dim: int, arity: int, constants: Mapping | Iterable = ()):
        super().__init__((dim,) * arity, dim, constants)

    @property
    def dim(self) -> int:
        return self.target_dim

    @classmethod
    def from_map(cls, m: MultiLinearMap) -> "BracketTensor":
        d = m.target_dim
        if any(s != d for s in m.source_dims):
            raise DimMismatch("not an endo-multilinear map")
        return cls(d, m.arity, m.items())


@dataclass
class IdentityReport:
    holds: bool
    witnesses: list = field(default_factory=list)
    instances: int = 0
    name: str = ""
    flagged: int = 0  # instances skipped as out of range

    def __bool__(self):
        return self.holds


class WitnessCollector:
    def __init__(self, cap, stop_early):
        self.cap = cap
        self.stop_early = stop_early
        self.witnesses = []
        self.failed = False
        self.instances = 0

    def record(self, ix, left, right, dim):
        self.instances += 1
        if left != right:
            self.failed = True
            if len(self.witnesses) < self.cap:
                self.witnesses.append((tuple(ix), from_sparse(left, dim), from_sparse(right, dim)))
        return self.stop_early and len(self.witnesses) >= self.cap and self.failed

    def report(self, name):
        return IdentityReport(not self.failed, self.witnesses, self.instances, name)


@dataclass(eq=True)
class HomNambuAlgebra:
    """(g, [.,...,.], (alpha_1, ..., alpha_{n-1})) given in coordinates."""

    bracket: BracketTensor
    twists: tuple
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if not isinstance(self.bracket, BracketTensor):
            self.bracket = BracketTensor.from_map(self.bracket)
        self.twists = tuple(self.twists)
        d, n = self.bracket.dim, self.bracket.arity
        if n < 2:
            raise ArityMismatch("arity must be at least 2")
        if len(self.twists) != n - 1:
            raise ArityMismatch(f"{len(self.twists)} twists for arity {n}")
        for a in self.twists:
            if a.shape != (d, d):
                raise DimMismatch(f"twist of shape {a.shape} on a {d}-dim space")

    @classmethod
    def untwisted(cls, bracket: BracketTensor, name: str = "") -> "HomNambuAlgebra":
        return cls(bracket, (Matrix.identity(bracket.dim),) * (bracket.arity - 1), name)

    @classmethod
    def multiplicative_form(cls, bracket: BracketTensor, alpha: Matrix, name: str = ""):
        return cls(bracket, (alpha,) * (bracket.arity - 1), name)

    @property
    def dim(self) -> int:
        return self.bracket.dim

    @property
    def arity(self) -> int:
        return self.bracket.arity

    @property
    def alpha(self) -> Matrix:
        """The common twist; only meaningful when all twists coincide."""
        return self.twists[0]

    @property
    def twists_equal(self) -> bool:
        return all(a == self.twists[0] for a in self.twists)

    @property
    def untwisted_flag(self) -> bool:
        return all(a.is_identity() for a in self.twists)

    @cached_property
    def multiplicative_flag(self) -> bool:
        return verify_multiplicative(self, witness_cap=1).holds

    def alpha_power(self, k: int) -> Matrix:
        cache = self.__dict__.setdefault("_alpha_powers", [Matrix.identity(self.dim)])
        while len(cache) <= k:
            cache.append(cache[-1] @ self.alpha)
        return cache[k]

    def __call__(self, *args):
        return bracket_apply(self, args)


def bracket_apply(alg: HomNambuAlgebra, args: Sequence) -> tuple:
    if len(args) != alg.arity:
        raise ArityMismatch(f"{len(args)} arguments for arity {alg.arity}")
    return alg.bracket(*args)


# ---------------------------------------------------------------------------
# identity verification


def _basis_twists(twists: Sequence[Matrix]) -> list:
    """twist t applied to basis vector j, as sparse vectors: out[t][j]."""
    return [list(a.sparse_columns) for a in twists]


def _unit(i):
    return {i: Q(1)}


def hom_nambu_sides(bracket: MultiLinearMap, twisted, xs, ys):
    """Both sides of the twisted fundamental identity on basis inputs.

    ``twisted[t][j]`` is alpha_{t+1}(e_j) as a sparse vector; ``xs``/``ys``
    are basis indices.  Slot t of the outer bracket on the left carries
    alpha_t(y_t); in the i-th summand on the right, x_j sits in slot j and
    is twisted by alpha_j before position i and by alpha_{j-1} after it.
    """
    n = len(xs)
    inner = bracket.value(tuple(xs))
    left = bracket.apply_sparse([inner] + [twisted[t][y] for t, y in enumerate(ys)])
    right: dict = {}
    for i in range(n):
        args = []
        for j in range(n):
            if j < i:
                args.append(twisted[j][xs[j]])
            elif j == i:
                args.append(bracket.value((xs[i],) + tuple(ys)))
            else:
                args.append(twisted[j - 1][xs[j]])
        sparse_axpy(right, 1, bracket.apply_sparse(args))
    return left, right


def verify_hom_nambu(alg: HomNambuAlgebra, witness_cap: int = DEFAULT_WITNESS_CAP,
                     stop_early: bool = False) -> IdentityReport:
    """Check the twisted fundamental identity with the twist family as given."""
    n, d = alg.arity, alg.dim
    twisted = _basis_twists(alg.twists)
    col = WitnessCollector(witness_cap, stop_early)
    for ix in product(range(d), repeat=2 * n - 1):
        left, right = hom_nambu_sides(alg.bracket, twisted, ix[:n], ix[n:])
        if col.record(ix, left, right, d):
            break
    return col.report("hom-nambu")


def verify_hom_nambu_multiplicative(alg: HomNambuAlgebra,
                                    witness_cap: int = DEFAULT_WITNESS_CAP) -> IdentityReport:
    """The single-twist form of the identity, using alpha = alpha_1 in every slot."""
    n, d = alg.arity, alg.dim
    br = alg.bracket
    a = alg.alpha.sparse_columns
    col = WitnessCollector(witness_cap, False)
    for ix in product(range(d), repeat=2 * n - 1):
        xs, ys = ix[:n], ix[n:]
        left = br.apply_sparse([br.value(xs)] + [a[y] for y in ys])
        right: dict = {}
        for i in range(n):
            args = [a[x] for x in xs]
            args[i] = br.value((xs[i],) + ys)
            sparse_axpy(right, 1, br.apply_sparse(args))
        col.record(ix, left, right, d)
    return col.report("hom-nambu-multiplicative")


def verify_leibniz(alg: HomNambuAlgebra, witness_cap: int = DEFAULT_WITNESS_CAP) -> IdentityReport:
    """The untwisted Leibniz n-algebra identity; the twists are ignored."""
    n, d = alg.arity, alg.dim
    br = alg.bracket
    col = WitnessCollector(witness_cap, False)
    for ix in product(range(d), repeat=2 * n - 1):
        xs, ys = ix[:n], ix[n:]
        left = br.apply_sparse([br.value(xs)] + [_unit(y) for y in ys])
        right: dict = {}
        for i in range(n):
            args = [_unit(x) for x in xs]
            args[i] = br.value((xs[i],) + ys)
            sparse_axpy(right, 1, br.apply_sparse(args))
        col.record(ix, left, right, d)
    return col.report("leibniz")


def verify_multiplicative(alg: HomNambuAlgebra,
                          witness_cap: int = DEFAULT_WITNESS_CAP) -> IdentityReport:
    """All twists equal and alpha a bracket homomorphism.

    Unequal twists give a failing report with no witnesses beyond a marker
    entry ``(("twists",), (), ())``.
    """
    d, n = alg.dim, alg.arity
    if not alg.twists_equal:
        return IdentityReport(False, [(("twists",), (), ())], 0, "multiplicative")
    a = alg.alpha
    acol = a.sparse_columns
    br = alg.bracket
    col = WitnessCollector(witness_cap, False)
    for ix in product(range(d), repeat=n):
        left = a.apply_sparse(br.value(ix))
        right = br.apply_sparse([acol[i] for i in ix])
        col.record(ix, left, right, d)
    return col.report("multiplicative")


def verify_hom_lie(alg: HomNambuAlgebra, witness_cap: int = DEFAULT_WITNESS_CAP) -> IdentityReport:
    """Antisymmetry on basis pairs, then the Hom-Jacobi identity on basis triples."""
    if alg.arity != 2:
        raise ArityMismatch("Hom-Lie algebras are binary")
    d = alg.dim
    br = alg.bracket
    a = alg.alpha.sparse_columns
    col = WitnessCollector(witness_cap, False)
    for x, y in product(range(d), repeat=2):
        left = br.value((x, y))
        right = {k: -v for k, v in br.value((y, x)).items()}
        col.record((x, y), left, right, d)
    for x, y, z in product(range(d), repeat=3):
        total: dict = {}
        for p, q, r in ((x, y, z), (y, z, x), (z, x, y)):
            sparse_axpy(total, 1, br.apply_sparse([a[p], br.value((q, r))]))
        col.record((x, y, z), total, {}, d)
    return col.report("hom-lie")


def verify_hom_ideal(basis: Sequence, alg: HomNambuAlgebra) -> bool:
    """[I, g] ⊆ I and alpha(I) ⊆ I for I = span(basis)."""
    if alg.arity != 2:
        raise ArityMismatch("Hom-ideals are defined for binary brackets")
    d = alg.dim
    ech = Echelon(d)
    vecs = [to_sparse(v) for v in basis]
    for v in vecs:
        ech.add(v)
    for v in vecs:
        if not ech.contains(alg.alpha.apply_sparse(v)):
            return False
        for j in range(d):
            if not ech.contains(alg.bracket.apply_sparse([v, _unit(j)])):
                return False
    return True


def verify_morphism(f: Matrix, source: HomNambuAlgebra, target: HomNambuAlgebra,
                    witness_cap: int = DEFAULT_WITNESS_CAP) -> IdentityReport:
    """f[x_1..x_n] = [f x_1..f x_n]' on basis tuples and f∘alpha_i = alpha'_i∘f.

    Twist failures are reported with a witness ``(("twist", i), ...)`` holding
    the two matrices' entries.
    """
    if source.arity != target.arity:
        raise ArityMismatch("source and target arities differ")
    if f.shape != (target.dim, source.dim):
        raise DimMismatch(f"map of shape {f.shape} between dims {source.dim}->{target.dim}")
    fcol = f.sparse_columns
    col = WitnessCollector(witness_cap, False)
    for ix in product(range(source.dim), repeat=source.arity):
        left = f.apply_sparse(source.bracket.value(ix))
        right = target.bracket.apply_sparse([fcol[i] for i in ix])
        col.record(ix, left, right, target.dim)
    rep = col.report("morphism")
    for i, (a, b) in enumerate(zip(source.twists, target.twists)):
        lhs, rhs = f @ a, b @ f
        if lhs != rhs:
            rep.holds = False
            if len(rep.witnesses) < witness_cap:
                rep.witnesses.append((("twist", i + 1), lhs.entries, rhs.entries))
    return rep


def random_rational(rng, bound: int = 5, den: int = 3) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, den))
