"""Plain-text facet lists.

One facet per line, labels separated by spaces.  ``#`` starts a comment and
blank lines are ignored.  The writer is canonical: labels are sorted within a
line and lines are sorted, so equal complexes produce identical text.
"""

from __future__ import annotations

from pathlib import Path

from .complex import SimplicialComplex


def parse_facet_list(text: str, *, pure: bool = True) -> SimplicialComplex:
    facets = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            facets.append(line.split())
    return SimplicialComplex.from_facets(facets, pure=pure)


def format_facet_list(X: SimplicialComplex, header: str | None = None) -> str:
    lines = []
    if header:
        lines.extend(f"# {h}" for h in header.splitlines())
    lines.extend(" ".join(str(v) for v in f) for f in X.facets)
    return "\n".join(lines) + "\n"


def read_facet_list(path, *, pure: bool = True) -> SimplicialComplex:
    return parse_facet_list(Path(path).read_text(), pure=pure)


def write_facet_list(X: SimplicialComplex, path, header: str | None = None) -> None:
    Path(path).write_text(format_facet_list(X, header))
