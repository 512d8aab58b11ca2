"""Write the fixture catalog to fixtures/ in the text formats.

    python scripts/write_fixtures.py [outdir]
"""

import pathlib
import sys

from homnambu import textio
from homnambu.algebra import MultiLinearMap
from homnambu.fixtures import (
    algebra_catalog,
    leib2_cochains,
    leib2_corrupt,
    leib2_functional,
    leib2_functional_last,
)


def file_stem(name: str) -> str:
    return name.replace("(", "_").replace(")", "").replace(",", "_")


def main(outdir="fixtures"):
    out = pathlib.Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    algs = dict(algebra_catalog())
    algs["leib2_corrupt"] = leib2_corrupt()
    for name, alg in algs.items():
        (out / f"{file_stem(name)}.alg").write_text(textio.serialize_algebra(alg))
    for rep in (leib2_functional(), leib2_functional_last()):
        (out / f"{rep.name}.rep").write_text(textio.serialize_representation(rep))
    for name, f in leib2_cochains().items():
        (out / f"leib2_{name}.cochain").write_text(textio.serialize_cochain(f, f"leib2_{name}"))
    f11 = MultiLinearMap((1, 1), 1, {(0, 0, 0): 1})
    (out / "abelian_1_2_f11.cochain").write_text(textio.serialize_cochain(f11, "abelian_1_2_f11"))
    for p in sorted(out.iterdir()):
        print(p)


if __name__ == "__main__":
    main(*sys.argv[1:])
