"""Brute-force sympy oracles, written against raw structure-constant dicts.

Nothing here imports the package's linear algebra: brackets are evaluated
densely from ``{(i1..in, j): c}`` dicts, every equation is written out with
sympy symbols, and dimensions come from ``sympy.Matrix.rank``.
"""

from itertools import product

import sympy as sp


def dense_bracket(consts, d, n):
    """Return br(vectors...) -> list, a dense n-linear map."""
    table = {}
    for key, c in consts.items():
        table.setdefault(key[:-1], []).append((key[-1], sp.Rational(c)))

    def br(*vs):
        out = [sp.Integer(0)] * d
        for ix in product(range(d), repeat=n):
            coef = sp.Integer(1)
            for v, i in zip(vs, ix):
                coef *= v[i]
                if coef == 0:
                    break
            if coef == 0:
                continue
            for j, c in table.get(ix, ()):
                out[j] += coef * c
        return out

    return br


def _mat_vec(M, v):
    return list(M * sp.Matrix(v))


def _unit(i, d):
    return [sp.Integer(1) if t == i else sp.Integer(0) for t in range(d)]


def derivation_dim(consts, d, n, alpha_rows, k):
    """dim of {D : D alpha = alpha D, D[x..] = sum_t [alpha^k x.., D x_t, .., alpha^k x..]}."""
    D = sp.Matrix(d, d, lambda r, c: sp.Symbol(f"D_{r}_{c}"))
    A = sp.Matrix(alpha_rows)
    Ak = A ** k
    br = dense_bracket(consts, d, n)
    eqs = list(D * A - A * D)
    for ix in product(range(d), repeat=n):
        es = [_unit(i, d) for i in ix]
        lhs = _mat_vec(D, br(*es))
        rhs = [sp.Integer(0)] * d
        for t in range(n):
            args = [_mat_vec(Ak, e) for e in es]
            args[t] = _mat_vec(D, es[t])
            rhs = [a + b for a, b in zip(rhs, br(*args))]
        eqs.extend(sp.expand(a - b) for a, b in zip(lhs, rhs))
    syms = list(D)
    M, _ = sp.linear_eq_to_matrix([e for e in eqs if e != 0] or [sp.Integer(0)], syms)
    return d * d - M.rank()


def hom_nambu_holds(consts, d, n, twist_rows):
    """The twisted fundamental identity checked densely on all basis tuples."""
    br = dense_bracket(consts, d, n)
    tw = [sp.Matrix(t) for t in twist_rows]
    for ix in product(range(d), repeat=2 * n - 1):
        xs = [_unit(i, d) for i in ix[:n]]
        ys = [_unit(i, d) for i in ix[n:]]
        left = br(br(*xs), *[_mat_vec(tw[t], y) for t, y in enumerate(ys)])
        right = [sp.Integer(0)] * d
        for i in range(n):
            args = []
            for j in range(n):
                if j < i:
                    args.append(_mat_vec(tw[j], xs[j]))
                elif j > i:
                    args.append(_mat_vec(tw[j - 1], xs[j]))
                else:
                    args.append(br(xs[i], *ys))
            right = [a + b for a, b in zip(right, br(*args))]
        if any(sp.simplify(a - b) != 0 for a, b in zip(left, right)):
            return False
    return True


def trivial_cohomology_dims(consts, d, n, twist_rows, m=1):
    """(dim Z, dim B, ext) for the trivial m-dim module, all h: g -> M allowed in B."""
    br = dense_bracket(consts, d, n)
    tw = [sp.Matrix(t) for t in twist_rows]
    F = {(ix, j): sp.Symbol("f_" + "_".join(map(str, ix)) + f"__{j}")
         for ix in product(range(d), repeat=n) for j in range(m)}

    def f(vs):
        out = [sp.Integer(0)] * m
        for ix in product(range(d), repeat=n):
            coef = sp.Integer(1)
            for v, i in zip(vs, ix):
                coef *= v[i]
            if coef != 0:
                for j in range(m):
                    out[j] += coef * F[(ix, j)]
        return out

    eqs = []
    for ix in product(range(d), repeat=2 * n - 1):
        xs = [_unit(i, d) for i in ix[:n]]
        ys = [_unit(i, d) for i in ix[n:]]
        left = f([br(*xs)] + [_mat_vec(tw[t], y) for t, y in enumerate(ys)])
        right = [sp.Integer(0)] * m
        for i in range(n):
            args = [_mat_vec(tw[j], xs[j]) if j < i else _mat_vec(tw[j - 1], xs[j]) if j > i
                    else br(xs[i], *ys) for j in range(n)]
            right = [a + b for a, b in zip(right, f(args))]
        eqs.extend(sp.expand(a - b) for a, b in zip(left, right))
    syms = list(F.values())
    M, _ = sp.linear_eq_to_matrix([e for e in eqs if e != 0] or [sp.Integer(0)], syms)
    z = len(syms) - M.rank()
    # B: image of h -> -h([x_1..x_n]) (the actions vanish)
    cols = []
    for r in range(m):
        for c in range(d):
            col = []
            for j in range(m):
                for ixx in product(range(d), repeat=n):
                    val = br(*[_unit(i, d) for i in ixx])[c] if j == r else 0
                    col.append(-val)
            cols.append(col)
    b = sp.Matrix(cols).T.rank() if cols else 0
    return z, b, z - b
