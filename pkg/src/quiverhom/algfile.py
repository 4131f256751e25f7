"""The .alg file format.

    # comments start with '#'; blank lines ignored
    vertices: 1 2 3
    arrow: a 1 2
    arrow: b 2 1
    truncated: 2            # or monomial: ... / relations: ... + nilpotency:
    field: Q                # optional; Q (default) or 'Fp 32003'

Paths are written in TRAVERSAL order with '.' separators: "a.b" traverses a
then b and requires t(a) = s(b); as a function-order product that is "b*a".
Relation terms are 'c*path' with c rational ("n" or "n/d"); the special term
J^k adds the full radical power to the ideal.  Unknown keys are rejected with
the offending line number.
"""

from fractions import Fraction

from .algebra import (
    MonomialIdeal,
    Relation,
    RelationsIdeal,
    TruncatedIdeal,
    build_algebra,
)
from .errors import ParseError
from .fields import QQ, field_from_spec
from .quiver import Path, Quiver

_KEYS = ("vertices", "arrow", "truncated", "monomial", "relations", "nilpotency", "field")


def _lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_algebra_text(text):
    """Parse .alg text into a built BoundQuiverAlgebra."""
    vertices = None
    arrows = []
    truncated = None
    monomial_seen = False
    relations_seen = False
    monomial_paths = []  # (lineno, token)
    relation_chunks = []  # (lineno, chunk)
    nilpotency = None
    field_spec = None
    for lineno, line in _lines(text):
        if ":" not in line:
            raise ParseError(f"expected 'key: value', got {line!r}", line=lineno)
        key, value = line.split(":", 1)
        key = key.strip()
        value = value.strip()
        if key not in _KEYS:
            raise ParseError(f"unknown key {key!r}", line=lineno)
        if key == "vertices":
            if vertices is not None:
                raise ParseError("duplicate vertices line", line=lineno)
            vertices = value.split()
            if not vertices:
                raise ParseError("empty vertex list", line=lineno)
        elif key == "arrow":
            parts = value.split()
            if len(parts) != 3:
                raise ParseError("arrow line needs 'name src dst'", line=lineno)
            arrows.append((lineno, tuple(parts)))
        elif key == "truncated":
            try:
                truncated = (lineno, int(value))
            except ValueError:
                raise ParseError(f"bad truncation exponent {value!r}", line=lineno)
        elif key == "monomial":
            monomial_seen = True
            for tok in value.split(","):
                tok = tok.strip()
                if tok:
                    monomial_paths.append((lineno, tok))
        elif key == "relations":
            relations_seen = True
            for tok in _split_relations(value):
                relation_chunks.append((lineno, tok))
        elif key == "nilpotency":
            try:
                nilpotency = (lineno, int(value))
            except ValueError:
                raise ParseError(f"bad nilpotency {value!r}", line=lineno)
        elif key == "field":
            field_spec = (lineno, value)
    if vertices is None:
        raise ParseError("missing vertices line")
    if not arrows:
        raise ParseError("no arrows declared")
    try:
        quiver = Quiver(vertices, [a for _ln, a in arrows])
    except ParseError:
        raise
    field = QQ
    if field_spec is not None:
        lineno, value = field_spec
        try:
            field = field_from_spec(value)
        except ParseError as exc:
            raise ParseError(exc.message, line=lineno)

    ideal_kinds = (truncated is not None) + monomial_seen + relations_seen
    if ideal_kinds != 1:
        raise ParseError("exactly one of truncated/monomial/relations must appear")
    if truncated is not None:
        ideal = TruncatedIdeal(truncated[1])
    elif monomial_seen:
        gens = [_parse_path(quiver, tok, ln) for ln, tok in monomial_paths]
        ideal = MonomialIdeal(gens)
    else:
        radical_power = None
        relations = []
        for ln, chunk in relation_chunks:
            if chunk.replace(" ", "").startswith("J^"):
                try:
                    radical_power = int(chunk.replace(" ", "")[2:])
                except ValueError:
                    raise ParseError(f"bad radical power term {chunk!r}", line=ln)
                continue
            relations.append(_parse_relation(quiver, chunk, ln))
        if nilpotency is None:
            if radical_power is None:
                raise ParseError("relations ideal needs a nilpotency line")
            nilpotency = (0, radical_power)
        if radical_power is not None and radical_power != nilpotency[1]:
            raise ParseError(
                f"J^{radical_power} generator disagrees with nilpotency {nilpotency[1]}",
                line=nilpotency[0],
            )
        ideal = RelationsIdeal(relations, nilpotency[1],
                               radical_power_included=radical_power is not None)
    if nilpotency is not None and ideal.kind != "relations":
        raise ParseError("nilpotency only applies to relations ideals", line=nilpotency[0])
    return build_algebra(quiver, ideal, field=field)


def _split_relations(value):
    """Split a relations line on commas (terms never contain commas)."""
    return [tok.strip() for tok in value.split(",") if tok.strip()]


def _parse_path(quiver, token, lineno):
    names = tuple(t.strip() for t in token.split("."))
    for n in names:
        if n not in quiver.arrow_by_name:
            raise ParseError(f"unknown arrow {n!r} in path {token!r}", line=lineno)
    try:
        return Path(quiver, names)
    except Exception as exc:
        raise ParseError(f"bad path {token!r}: {exc}", line=lineno)


def _parse_relation(quiver, chunk, lineno):
    """'c1*p1 - c2*p2 + ...' into a Relation."""
    terms = []
    sign = 1
    buf = ""
    pieces = []
    for ch in chunk:
        if ch in "+-":
            if buf.strip():
                pieces.append((sign, buf.strip()))
            sign = 1 if ch == "+" else -1
            buf = ""
        else:
            buf += ch
    if buf.strip():
        pieces.append((sign, buf.strip()))
    if not pieces:
        raise ParseError("empty relation", line=lineno)
    for sgn, piece in pieces:
        if "*" in piece:
            ctext, ptext = piece.split("*", 1)
            try:
                coeff = Fraction(ctext.strip())
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"bad coefficient {ctext!r}", line=lineno)
        else:
            coeff = Fraction(1)
            ptext = piece
        terms.append((sgn * coeff, _parse_path(quiver, ptext.strip(), lineno)))
    try:
        return Relation(terms)
    except Exception as exc:
        raise ParseError(f"bad relation {chunk!r}: {exc}", line=lineno)


def format_algebra(algebra):
    """Canonical .alg text; parse(format(parse(t))) == parse(t)."""
    out = [f"vertices: {' '.join(algebra.quiver.vertices)}"]
    for a in algebra.quiver.arrows:
        out.append(f"arrow: {a.name} {a.source} {a.target}")
    if algebra.kind == "truncated":
        out.append(f"truncated: {algebra.ideal.k}")
    elif algebra.kind == "monomial":
        gens = ", ".join(g.traversal_str() for g in algebra.ideal.generators)
        out.append(f"monomial: {gens}")
    else:
        chunks = []
        for rel in algebra.ideal.relations:
            parts = []
            for i, (c, p) in enumerate(rel.terms):
                coeff = Fraction(c)
                mag = abs(coeff)
                body = p.traversal_str() if mag == 1 else f"{mag}*{p.traversal_str()}"
                if i == 0:
                    parts.append(body if coeff > 0 else f"-{body}")
                else:
                    parts.append(("+ " if coeff > 0 else "- ") + body)
            chunks.append(" ".join(parts))
        if algebra.ideal.radical_power_included:
            chunks.append(f"J^{algebra.ideal.nilpotency}")
        out.append("relations: " + ", ".join(chunks))
        out.append(f"nilpotency: {algebra.ideal.nilpotency}")
    out.append(f"field: {algebra.field.name}" if algebra.field.name == "Q"
               else f"field: Fp {algebra.field.char}")
    return "\n".join(out) + "\n"


def parse_split_text(text):
    """Split files for the triangular check: 'gamma:' and 'gamma_bar:' lines."""
    gamma = gamma_bar = None
    for lineno, line in _lines(text):
        if ":" not in line:
            raise ParseError(f"expected 'key: value', got {line!r}", line=lineno)
        key, value = line.split(":", 1)
        key = key.strip()
        if key == "gamma":
            gamma = value.split()
        elif key == "gamma_bar":
            gamma_bar = value.split()
        else:
            raise ParseError(f"unknown key {key!r} in split file", line=lineno)
    if gamma is None or gamma_bar is None:
        raise ParseError("split file needs gamma and gamma_bar lines")
    return gamma, gamma_bar
