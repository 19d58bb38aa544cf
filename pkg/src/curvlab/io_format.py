"""Tensor document format: parse and canonical serialization.

A document is line oriented.  The first nonblank line is the header
``curvlab-tensor/1``; after it come ``key = value`` assignments and sparse
component entries, with ``#`` comments and blank lines ignored:

    curvlab-tensor/1
    m = 2
    s = 1
    J = canonical            # or: custom, followed by 2m rows J[r] = ...
    name = example           # optional, token of [A-Za-z0-9_.+-]
    seed = 7                 # optional integer
    symmetrize = false
    bianchi = false
    R[1,2,2,1] = -3/4

Indices are 1-based in files and 0-based in the API; the conversion lives
here and only here.  Values are exact rationals ``p`` or ``p/q`` (no floats
in files; float-backend commands convert after parsing).  The canonical
serialization fixes key order, reduces rationals, sorts entries
lexicographically and omits zero entries, so parse/serialize round-trips
byte for byte on canonical files.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .scalars import format_rational
from .spaces import GeometryError, make_space
from .tensors import CurvatureTensor, from_components

HEADER = "curvlab-tensor/1"

_RATIONAL = re.compile(r"-?\d+(/\d+)?$")
_NAME = re.compile(r"[A-Za-z0-9_.+-]+$")
_ENTRY_KEY = re.compile(r"R\[(\d+),(\d+),(\d+),(\d+)\]$")
_JROW_KEY = re.compile(r"J\[(\d+)\]$")


class ParseError(GeometryError):
    def __init__(self, message: str, line: int, col: int = 1):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class TensorDocument:
    """Parsed tensor file: space description plus sparse components."""

    m: int
    s: int
    J: Optional[tuple] = None          # rows of Fractions; None = canonical
    name: Optional[str] = None
    seed: Optional[int] = None
    symmetrize: bool = False
    bianchi: bool = False
    entries: tuple = ()                # ((i, j, k, l, Fraction), ...) 1-based

    def canonical(self) -> "TensorDocument":
        ents = sorted((e for e in self.entries if e[4] != 0),
                      key=lambda e: e[:4])
        merged = []
        for e in ents:
            if merged and tuple(merged[-1][:4]) == tuple(e[:4]):
                merged[-1][4] += e[4]
            else:
                merged.append(list(e))
        return TensorDocument(
            self.m, self.s, self.J, self.name, self.seed,
            self.symmetrize, self.bianchi,
            tuple((i, j, k, l, v) for i, j, k, l, v in merged if v != 0))


def _rational_value(tok: str, lineno: int, col: int) -> Fraction:
    if not _RATIONAL.match(tok):
        raise ParseError(f"expected a rational p or p/q, got {tok!r}", lineno, col)
    return Fraction(tok)


def parse_document(text: str) -> TensorDocument:
    lines = text.splitlines()
    fields = {"J_rows": {}, "entries": []}
    header_seen = False
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if not header_seen:
            if line.strip() != HEADER:
                raise ParseError(f"expected header {HEADER!r}", lineno)
            header_seen = True
            continue
        if "=" not in line:
            raise ParseError("expected 'key = value'", lineno, len(line))
        key, _, value = line.partition("=")
        col = len(key) + 2
        key, value = key.strip(), value.strip()
        if key in ("m", "s", "seed"):
            if not re.fullmatch(r"-?\d+", value):
                raise ParseError(f"{key} must be an integer", lineno, col)
            fields[key] = int(value)
        elif key == "J":
            if value not in ("canonical", "custom"):
                raise ParseError("J must be 'canonical' or 'custom'", lineno, col)
            fields["J"] = value
        elif key == "name":
            if not _NAME.match(value):
                raise ParseError("name must match [A-Za-z0-9_.+-]+", lineno, col)
            fields["name"] = value
        elif key in ("symmetrize", "bianchi"):
            if value not in ("true", "false"):
                raise ParseError(f"{key} must be true or false", lineno, col)
            fields[key] = value == "true"
        elif _JROW_KEY.match(key):
            r = int(_JROW_KEY.match(key).group(1))
            toks = value.split()
            fields["J_rows"][r] = [_rational_value(t, lineno, col) for t in toks]
        elif _ENTRY_KEY.match(key):
            i, j, k, l = (int(g) for g in _ENTRY_KEY.match(key).groups())
            fields["entries"].append((i, j, k, l, _rational_value(value, lineno, col)))
        else:
            raise ParseError(f"unknown key {key!r}", lineno)
    if not header_seen:
        raise ParseError(f"missing header {HEADER!r}", max(1, len(lines)))
    for req in ("m", "s"):
        if req not in fields:
            raise ParseError(f"missing required field {req!r}", len(lines))
    m, s = fields["m"], fields["s"]
    J = None
    if fields.get("J") == "custom" or fields["J_rows"]:
        rows = fields["J_rows"]
        n = 2 * m
        if sorted(rows) != list(range(1, n + 1)):
            raise ParseError(f"custom J needs rows J[1] .. J[{n}]", len(lines))
        for r, row in rows.items():
            if len(row) != n:
                raise ParseError(f"J[{r}] must have {n} entries", len(lines))
        J = tuple(tuple(rows[r]) for r in range(1, n + 1))
    doc = TensorDocument(m=m, s=s, J=J,
                         name=fields.get("name"), seed=fields.get("seed"),
                         symmetrize=fields.get("symmetrize", False),
                         bianchi=fields.get("bianchi", False),
                         entries=tuple(fields["entries"]))
    return doc.canonical()


def serialize_document(doc: TensorDocument) -> str:
    doc = doc.canonical()
    out = [HEADER, f"m = {doc.m}", f"s = {doc.s}"]
    if doc.J is None:
        out.append("J = canonical")
    else:
        out.append("J = custom")
        for r, row in enumerate(doc.J, start=1):
            out.append(f"J[{r}] = " + " ".join(format_rational(v) for v in row))
    if doc.name is not None:
        out.append(f"name = {doc.name}")
    if doc.seed is not None:
        out.append(f"seed = {doc.seed}")
    out.append(f"symmetrize = {'true' if doc.symmetrize else 'false'}")
    out.append(f"bianchi = {'true' if doc.bianchi else 'false'}")
    for (i, j, k, l, v) in doc.entries:
        out.append(f"R[{i},{j},{k},{l}] = {format_rational(v)}")
    return "\n".join(out) + "\n"


def build_tensor(doc: TensorDocument) -> CurvatureTensor:
    """Construct the space and tensor a document describes (exact backend)."""
    space = make_space(doc.m, doc.s, J=doc.J)
    entries = [(i - 1, j - 1, k - 1, l - 1, v) for (i, j, k, l, v) in doc.entries]
    return from_components(space, entries, symmetrize=doc.symmetrize,
                           bianchi_projection=doc.bianchi)


def document_from_tensor(R: CurvatureTensor, name: Optional[str] = None,
                         seed: Optional[int] = None) -> TensorDocument:
    """Sparse canonical document for an exact tensor (components stored as is)."""
    if not R.is_exact:
        raise GeometryError("documents store exact rationals; convert before writing")
    space = R.space
    J = None
    if not space.has_canonical_J:
        J = tuple(tuple(Fraction(x) for x in row) for row in space.J)
    entries = []
    n = space.n
    comp = R.components
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    v = comp[i, j, k, l]
                    if v:
                        entries.append((i + 1, j + 1, k + 1, l + 1, Fraction(v)))
    doc = TensorDocument(m=space.m, s=space.s, J=J, name=name, seed=seed,
                         symmetrize=False, bianchi=False, entries=tuple(entries))
    return doc.canonical()
