"""The fixture command suite behind the golden reports.

Each entry is (golden name, argv).  Paths are relative to the repository
root, and :func:`run_suite` runs from there so the command echo in every
report is machine independent.
"""

from __future__ import annotations

import os
from contextlib import contextmanager

from .cli import run_command

ALGEBRAS = ("abelian_1_2", "abelian_2_2", "abelian_2_3", "leib2", "nambu4",
            "leib2_twist", "nambu4_neg", "hom_lie2")
BINARY = ("abelian_1_2", "abelian_2_2", "leib2", "leib2_twist", "hom_lie2")


def _alg(name):
    return f"fixtures/{name}.alg"


def suite() -> list:
    cmds = []
    for a in ALGEBRAS + ("leib2_corrupt",):
        cmds.append((f"verify_{a}", ["verify", _alg(a), "--check", "hom-nambu",
                                     "--check", "multiplicative", "--check", "leibniz"]))
    for a in ALGEBRAS:
        cmds.append((f"derive_{a}", ["derive", _alg(a), "--kmax", "3"]))
        cmds.append((f"inner_{a}", ["inner", _alg(a), "--k", "0"]))
        cmds.append((f"omega_{a}", ["omega-derive", _alg(a), "--k", "1"]))
        cmds.append((f"tensor_plain_{a}", ["tensor", _alg(a), "--variant", "plain"]))
        cmds.append((f"tensor_hom_{a}", ["tensor", _alg(a), "--variant", "hom"]))
        cmds.append((f"cohomology_{a}", ["cohomology", _alg(a)]))
        cmds.append((f"cohomology_adjoint_{a}", ["cohomology", _alg(a), "--adjoint"]))
    cmds.append(("tensor_power_nambu4", ["tensor", _alg("nambu4"), "--variant", "power",
                                          "--k", "2"]))
    cmds.append(("tensor_power_nambu4_neg", ["tensor", _alg("nambu4_neg"), "--variant",
                                              "power", "--k", "2"]))
    cmds.append(("tensor_power_nambu4_k1", ["tensor", _alg("nambu4"), "--variant", "power",
                                             "--k", "1"]))
    for a in BINARY:
        cmds.append((f"hom_lie_{a}", ["verify", _alg(a), "--check", "hom-lie"]))
    for label, m in (("rho", "4 0; 0 2"), ("diag9m3", "9 0; 0 -3"), ("swap", "0 1; 1 0")):
        cmds.append((f"twist_leib2_{label}", ["twist", _alg("leib2"), "--rho", m]))
        cmds.append((f"morphism_leib2_{label}", ["morphism", _alg("leib2"), "--map", m]))
    cmds.append(("compose_leib2_twist", ["twist", _alg("leib2_twist"), "--beta", "9 0; 0 -3"]))
    rep = "fixtures/leib2_functional.rep"
    cmds.append(("rep_leib2_functional", ["rep-verify", _alg("leib2"), "--rep", rep]))
    cmds.append(("rep_leib2_functional_last", ["rep-verify", _alg("leib2"), "--rep",
                                                "fixtures/leib2_functional_last.rep"]))
    cmds.append(("cohomology_leib2_functional", ["cohomology", _alg("leib2"), "--rep", rep]))
    for c in ("f11", "f12", "f22"):
        cochain = f"fixtures/leib2_{c}.cochain"
        cmds.append((f"split_leib2_{c}", ["split", _alg("leib2"), cochain]))
        cmds.append((f"split_leib2_functional_{c}", ["split", _alg("leib2"), cochain,
                                                     "--rep", rep]))
        cmds.append((f"extension_leib2_{c}", ["extension", _alg("leib2"), cochain]))
    cmds.append(("split_abelian_1_2_f11", ["split", _alg("abelian_1_2"),
                                            "fixtures/abelian_1_2_f11.cochain"]))
    cmds.append(("extension_nambu4", ["extension", _alg("nambu4")]))
    return cmds


@contextmanager
def _cwd(path):
    old = os.getcwd()
    os.chdir(path)
    try:
        yield
    finally:
        os.chdir(old)


def run_suite(root, names=None) -> dict:
    """Run the suite from ``root``; return {name: (report text, exit status)}."""
    out = {}
    with _cwd(root):
        for name, argv in suite():
            if names is None or name in names:
                out[name] = run_command(argv)
    return out
