"""The ``.scx`` text format: an optional ``vertices`` header, then one maximal
simplex per line (whitespace separated names).  ``#`` starts a comment.

A header with no names and no body denotes the complex ``{phi}``.
"""

from __future__ import annotations

from .complex import Complex, ComplexError, build_complex


class ScxError(ComplexError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _tokens(raw: str):
    """Tokens with 1-based columns, comment stripped."""
    body = raw.split("#", 1)[0]
    out, i = [], 0
    while i < len(body):
        if body[i].isspace():
            i += 1
            continue
        j = i
        while j < len(body) and not body[j].isspace():
            j += 1
        out.append((body[i:j], i + 1))
        i = j
    return out


def parse_scx(text: str) -> Complex:
    header = None
    facets = []
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokens(raw)
        if not toks:
            continue
        if toks[0][0] == "vertices":
            if seen_content:
                raise ScxError("'vertices' header must come first", lineno, toks[0][1])
            header = []
            for name, col in toks[1:]:
                if name in header:
                    raise ScxError(f"vertex {name!r} declared twice", lineno, col)
                header.append(name)
            seen_content = True
            continue
        seen_content = True
        names = []
        for name, col in toks:
            if name == "vertices":
                raise ScxError("'vertices' is reserved for the header", lineno, col)
            if name in names:
                raise ScxError(f"duplicate vertex {name!r} in simplex", lineno, col)
            if header is not None and name not in header:
                raise ScxError(f"unknown vertex {name!r}", lineno, col)
            names.append(name)
        facets.append(names)
    return build_complex(facets, header)


def emit_scx(K: Complex) -> str:
    """Canonical text: full vertex header, then the maximal simplices in order."""
    for n in K.names:
        if not n or any(c.isspace() for c in n) or "#" in n or n == "vertices":
            raise ComplexError(f"vertex name {n!r} cannot be written as .scx")
    lines = ["vertices" + "".join(" " + n for n in K.names)]
    lines += [" ".join(K.names[v] for v in s) for s in K.maximal_simplices() if s]
    return "\n".join(lines) + "\n"


def read_scx(path: str) -> Complex:
    with open(path, encoding="utf-8") as fh:
        return parse_scx(fh.read())
