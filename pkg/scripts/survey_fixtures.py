"""Print a table of invariants for every shipped fixture.

    python scripts/survey_fixtures.py [--kmax K]

Columns: identity verdicts, dim Der_{alpha^k} for k <= K, inner dims,
(Z, B, Ext) with the trivial and adjoint modules, tensor-power verdicts.
"""

import argparse
import time

from homnambu.algebra import verify_hom_nambu, verify_leibniz, verify_multiplicative
from homnambu.cohomology import adjoint_module, cochain_spaces, trivial_module, verify_representation
from homnambu.constructions import tensor_hom_leibniz, tensor_leibniz
from homnambu.derivations import assemble_der_algebra, check_inn_ideal, inner_space
from homnambu.fixtures import algebra_catalog


def _yn(b):
    return "yes" if b else "no"


def survey(kmax):
    rows = []
    for name, alg in algebra_catalog().items():
        t0 = time.perf_counter()
        gda = assemble_der_algebra(alg, kmax)
        triv = cochain_spaces(alg, trivial_module(alg))
        adj = adjoint_module(alg)
        if verify_representation(alg, adj).holds:
            a = cochain_spaces(alg, adj)
            adj_dims = f"{a.z_dim}/{a.b_dim}/{a.ext_dim}"
        else:
            adj_dims = "not a rep"
        rows.append([
            name,
            _yn(verify_hom_nambu(alg).holds),
            _yn(verify_leibniz(alg).holds),
            _yn(verify_multiplicative(alg).holds),
            ",".join(str(s.dimension) for s in gda.spaces),
            _yn(gda.hom_lie_report().holds),
            str(inner_space(alg, 0).dimension),
            _yn(check_inn_ideal(alg, kmax).holds),
            f"{triv.z_dim}/{triv.b_dim}/{triv.ext_dim}",
            adj_dims,
            _yn(tensor_leibniz(alg).holds),
            _yn(tensor_hom_leibniz(alg).holds),
            f"{time.perf_counter() - t0:.2f}",
        ])
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--kmax", type=int, default=2)
    args = ap.parse_args()
    head = ["fixture", "hom-nambu", "leibniz", "mult", "der dims", "der hom-lie", "inner",
            "inn ideal", "Z/B/Ext triv", "Z/B/Ext adj", "tensor", "tensor-hom", "sec"]
    rows = [head] + survey(args.kmax)
    widths = [max(len(r[i]) for r in rows) for i in range(len(head))]
    for r in rows:
        print("  ".join(c.ljust(w) for c, w in zip(r, widths)))


if __name__ == "__main__":
    main()
