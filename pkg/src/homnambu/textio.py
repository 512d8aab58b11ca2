"""Line-oriented text formats for algebras, representations, cochains and matrices.

Indices in files are 1-based; values use the rational syntax
``[sign]int[/positive int]``.  ``#`` starts a comment.  Example::

    name: leib2
    dim: 2
    arity: 2
    twist 1: id
    bracket:
    2 2 -> 1 : 1

Twists are ``id`` or rows separated by ``;`` (``twist 1: 4 0; 0 2``).
A representation document replaces ``dim`` by ``algebra_dim`` and
``module_dim`` and has one ``action p:`` section per position p; inside it
slot p indexes M and the output indexes M.  A cochain document has the same
header and a single ``cochain:`` section mapping g-indices to M-indices.

Serialization is canonical (sorted constants, lowest-terms values), so
``serialize(parse(t))`` is a fixed point and the SHA-256 of it is a stable
content digest.
"""

from __future__ import annotations

import hashlib
import re

from .algebra import BracketTensor, HomNambuAlgebra, MultiLinearMap
from .cohomology import Representation
from .errors import DuplicateKey, ParseError, RangeError
from .exact import Matrix, format_rational, parse_rational

_CONST_RE = re.compile(r"^(?P<lhs>[^-]*?)\s*->\s*(?P<j>\S+)\s*:\s*(?P<v>\S+)$")


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _int(text, lineno, what):
    try:
        v = int(text)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {text!r}", lineno) from None
    return v


def parse_matrix(text: str, dim: int | None = None, lineno: int | None = None) -> Matrix:
    """``id`` (needs ``dim``) or rows of rationals separated by ``;`` or newlines."""
    body = text.strip()
    if body == "id":
        if dim is None:
            raise ParseError("'id' needs a known dimension", lineno)
        return Matrix.identity(dim)
    rows = []
    for chunk in re.split(r"[;\n]", body):
        chunk = _strip(chunk)
        if not chunk:
            continue
        try:
            rows.append([parse_rational(tok) for tok in chunk.split()])
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
    if not rows:
        raise ParseError("empty matrix", lineno)
    if any(len(r) != len(rows[0]) for r in rows):
        raise ParseError("ragged matrix rows", lineno)
    m = Matrix.from_rows(rows)
    if dim is not None and m.shape != (dim, dim):
        raise RangeError(f"matrix of shape {m.shape}, expected {dim}x{dim}", lineno)
    return m


def format_matrix(m: Matrix) -> str:
    if m.is_identity():
        return "id"
    return "; ".join(" ".join(format_rational(x) for x in m.row(r)) for r in range(m.rows))


class _Doc:
    """Headers plus named sections of constant lines."""

    def __init__(self, text: str):
        self.headers: dict = {}
        self.header_lines: dict = {}
        self.sections: dict = {}
        self.section_lines: dict = {}
        current = None
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = _strip(raw)
            if not line:
                continue
            if "->" in line:
                if current is None:
                    raise ParseError("constant line outside a section", lineno, 1)
                self.sections[current].append((lineno, line, raw))
                continue
            if ":" not in line:
                raise ParseError(f"expected 'key: value', got {line!r}", lineno, 1)
            key, value = (s.strip() for s in line.split(":", 1))
            if not value:
                if key in self.sections:
                    raise ParseError(f"section {key!r} repeated", lineno, 1)
                current = key
                self.sections[key] = []
                self.section_lines[key] = lineno
                continue
            if key in self.headers:
                raise ParseError(f"header {key!r} repeated", lineno, 1)
            self.headers[key] = value
            self.header_lines[key] = lineno
            current = None

    def require(self, key):
        if key not in self.headers:
            raise ParseError(f"missing header {key!r}")
        return self.headers[key]

    def get_int(self, key):
        v = _int(self.require(key), self.header_lines[key], key)
        if v < 1:
            raise RangeError(f"{key} must be positive", self.header_lines[key])
        return v


def _parse_constants(lines, dims, target_dim):
    """Constant lines -> list of 0-based ((i1..ir, j), value)."""
    seen = set()
    out = []
    for lineno, line, raw in lines:
        m = _CONST_RE.match(line)
        if m is None:
            raise ParseError("expected 'i1 ... in -> j : value'", lineno, 1)
        toks = m.group("lhs").split()
        if len(toks) != len(dims):
            raise ParseError(f"{len(toks)} input indices, expected {len(dims)}", lineno, 1)
        ix = []
        for t, (tok, d) in enumerate(zip(toks, dims)):
            i = _int(tok, lineno, "index")
            if not 1 <= i <= d:
                raise RangeError(f"index {i} outside 1..{d} in slot {t + 1}", lineno,
                                 raw.find(tok) + 1)
            ix.append(i - 1)
        j = _int(m.group("j"), lineno, "output index")
        if not 1 <= j <= target_dim:
            raise RangeError(f"output index {j} outside 1..{target_dim}", lineno,
                             raw.find("->") + 1)
        vtext = m.group("v")
        try:
            value = parse_rational(vtext)
        except ParseError as exc:
            raise ParseError(str(exc), lineno, raw.rfind(vtext) + 1) from None
        key = tuple(ix) + (j - 1,)
        if key in seen:
            raise DuplicateKey(f"duplicate constant for {toks} -> {j}", lineno, 1)
        seen.add(key)
        out.append((key, value))
    return out


def _format_constants(m: MultiLinearMap) -> list:
    return [" ".join(str(i + 1) for i in key[:-1]) + f" -> {key[-1] + 1} : {format_rational(c)}"
            for key, c in m.items()]


# ---------------------------------------------------------------------------
# algebras


def parse_algebra(text: str) -> HomNambuAlgebra:
    doc = _Doc(text)
    unknown = set(doc.sections) - {"bracket"}
    if unknown:
        raise ParseError(f"unknown section {sorted(unknown)[0]!r}",
                         doc.section_lines[sorted(unknown)[0]])
    d = doc.get_int("dim")
    n = doc.get_int("arity")
    if n < 2:
        raise RangeError("arity must be at least 2", doc.header_lines["arity"])
    twists = []
    for i in range(1, n):
        key = f"twist {i}"
        if key not in doc.headers:
            raise ParseError(f"missing header {key!r}")
        twists.append(parse_matrix(doc.headers[key], d, doc.header_lines[key]))
    extra = {k for k in doc.headers if k.startswith("twist")} - {f"twist {i}" for i in range(1, n)}
    allowed = {"name", "dim", "arity"} | {f"twist {i}" for i in range(1, n)}
    for key in doc.headers:
        if key not in allowed or key in extra:
            raise ParseError(f"unknown header {key!r}", doc.header_lines[key], 1)
    consts = _parse_constants(doc.sections.get("bracket", []), (d,) * n, d)
    return HomNambuAlgebra(BracketTensor(d, n, consts), twists, doc.headers.get("name", ""))


def serialize_algebra(alg: HomNambuAlgebra) -> str:
    lines = []
    if alg.name:
        lines.append(f"name: {alg.name}")
    lines += [f"dim: {alg.dim}", f"arity: {alg.arity}"]
    for i, a in enumerate(alg.twists, 1):
        lines.append(f"twist {i}: {format_matrix(a)}")
    lines.append("bracket:")
    lines += _format_constants(alg.bracket)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# representations and cochains


def _module_header(doc, allowed_sections):
    for key in doc.headers:
        if key not in {"name", "algebra_dim", "arity", "module_dim"}:
            raise ParseError(f"unknown header {key!r}", doc.header_lines[key], 1)
    for key in doc.sections:
        if key not in allowed_sections:
            raise ParseError(f"unknown section {key!r}", doc.section_lines[key], 1)
    return doc.get_int("algebra_dim"), doc.get_int("arity"), doc.get_int("module_dim")


def parse_representation(text: str) -> Representation:
    doc = _Doc(text)
    n = _int(doc.require("arity"), doc.header_lines.get("arity"), "arity")
    d, n, m = _module_header(doc, {f"action {p}" for p in range(1, n + 1)})
    acts = []
    for p in range(n):
        dims = tuple(m if t == p else d for t in range(n))
        consts = _parse_constants(doc.sections.get(f"action {p + 1}", []), dims, m)
        acts.append(MultiLinearMap(dims, m, consts))
    return Representation(d, m, acts, doc.headers.get("name", ""))


def _module_lines(name, d, n, m):
    lines = [f"name: {name}"] if name else []
    return lines + [f"algebra_dim: {d}", f"arity: {n}", f"module_dim: {m}"]


def serialize_representation(rep: Representation) -> str:
    lines = _module_lines(rep.name, rep.algebra_dim, rep.arity, rep.module_dim)
    for p, act in enumerate(rep.actions, 1):
        lines.append(f"action {p}:")
        lines += _format_constants(act)
    return "\n".join(lines) + "\n"


def parse_cochain(text: str) -> tuple:
    """Return (name, algebra_dim, arity, module_dim, MultiLinearMap)."""
    doc = _Doc(text)
    d, n, m = _module_header(doc, {"cochain"})
    consts = _parse_constants(doc.sections.get("cochain", []), (d,) * n, m)
    return doc.headers.get("name", ""), d, n, m, MultiLinearMap((d,) * n, m, consts)


def serialize_cochain(f: MultiLinearMap, name: str = "") -> str:
    d = f.source_dims[0]
    lines = _module_lines(name, d, f.arity, f.target_dim) + ["cochain:"]
    lines += _format_constants(f)
    return "\n".join(lines) + "\n"


def digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()
