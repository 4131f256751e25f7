"""Module expressions for the CLI.

Grammar:

    EXPR  := TERM ('+' TERM)*
    TERM  := INT '*' ATOM | ATOM
    ATOM  := 'path' '(' dotted-path ')' | 'simple' '(' v ')'
           | 'proj' '(' v ')' | 'inj' '(' v ')'
           | 'rep' '{' dims ';' arrow '=' MATRIX (';' ...)* '}'
           | NAME '(' args ')'          # corpus generator, e.g. M_alpha(1,3)
           | '(' EXPR ')'

A rep literal lists per-vertex dimensions ('v:dim', whitespace separated)
then per-arrow matrices, row-major, entries exact rationals; matrix shape is
(target dimension) x (source dimension).

Expressions evaluate in one of two contexts: 'multiset' (formal path-module
classes, monomial/truncated algebras only; path() and simple() atoms) or
'rep' (concrete representations; all atoms).  Mixing is an error; 'auto'
picks multiset when the algebra supports it and no rep-only atom occurs.
"""

from fractions import Fraction

from . import reps
from .errors import ParseError, UnsupportedIdeal
from .pathmodules import ModuleMultiset, calculus


class _Tokens:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        self._skip_ws()
        if not self.text.startswith(ch, self.pos):
            raise ParseError(f"expected {ch!r} at position {self.pos} in module expression")
        self.pos += len(ch)

    def name(self):
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum()
                                             or self.text[self.pos] in "_."):
            self.pos += 1
        if start == self.pos:
            raise ParseError(f"expected a name at position {start} in module expression")
        return self.text[start:self.pos]

    def until(self, closing):
        depth = 1
        start = self.pos
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch == closing[0] and depth == 1:
                out = self.text[start:self.pos]
                self.pos += 1
                return out
            if ch in "([{":
                depth += 1
            elif ch in ")]}":
                depth -= 1
                if depth == 0:
                    out = self.text[start:self.pos]
                    self.pos += 1
                    return out
            self.pos += 1
        raise ParseError(f"unbalanced {closing!r} in module expression")

    def integer(self):
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError(f"expected an integer at position {start}")
        return int(self.text[start:self.pos])

    def at_end(self):
        self._skip_ws()
        return self.pos >= len(self.text)


def parse_expression(text):
    toks = _Tokens(text)
    terms = [_parse_term(toks)]
    while not toks.at_end():
        toks.expect("+")
        terms.append(_parse_term(toks))
    return ("sum", terms)


def _parse_term(toks):
    if toks.peek().isdigit():
        mult = toks.integer()
        toks.expect("*")
        atom = _parse_atom(toks)
        return ("scale", mult, atom)
    return ("scale", 1, _parse_atom(toks))


def _parse_atom(toks):
    if toks.peek() == "(":
        toks.expect("(")
        inner_text = toks.until(")")
        return parse_expression(inner_text)
    name = toks.name()
    if name == "rep":
        toks.expect("{")
        body = toks.until("}")
        return ("rep", body)
    toks.expect("(")
    args = toks.until(")")
    return ("call", name, [a.strip() for a in args.split(",") if a.strip()])


REP_ONLY = {"proj", "inj", "rep"}


def _uses_rep_atom(node, generators):
    kind = node[0]
    if kind == "sum":
        return any(_uses_rep_atom(t, generators) for t in node[1])
    if kind == "scale":
        return _uses_rep_atom(node[2], generators)
    if kind == "rep":
        return True
    name = node[1]
    return name in REP_ONLY or name in generators


def evaluate(text, algebra, context="auto", generators=None):
    """Evaluate an expression; returns ('multiset', ModuleMultiset) or
    ('rep', list of (Representation, multiplicity))."""
    generators = generators or {}
    ast = parse_expression(text)
    if context == "auto":
        if _uses_rep_atom(ast, generators) or not algebra.is_monomial_like:
            context = "rep"
        else:
            context = "multiset"
    if context == "multiset":
        if not algebra.is_monomial_like:
            raise UnsupportedIdeal(
                "formal path-module expressions need a monomial or truncated ideal"
            )
        return "multiset", _eval_multiset(ast, algebra)
    return "rep", _eval_rep(ast, algebra, generators)


def _eval_multiset(node, algebra):
    kind = node[0]
    calc = calculus(algebra)
    if kind == "sum":
        out = ModuleMultiset()
        for t in node[1]:
            out = out.add(_eval_multiset(t, algebra))
        return out
    if kind == "scale":
        return _eval_multiset(node[2], algebra).scale(node[1])
    if kind == "rep":
        raise ParseError("rep{...} literals are not formal path-module expressions")
    name, args = node[1], node[2]
    if name == "path":
        if len(args) != 1:
            raise ParseError("path() takes one dotted path")
        return ModuleMultiset([calc.class_of(algebra.path(args[0]))])
    if name == "simple":
        if len(args) != 1:
            raise ParseError("simple() takes one vertex")
        _check_vertex(algebra, args[0])
        return ModuleMultiset([calc.simple_class(args[0])])
    if name == "proj":
        _check_vertex(algebra, args[0])
        return ModuleMultiset([calc.projective_class(args[0])])
    raise ParseError(f"{name}() is not a formal path-module atom")


def _check_vertex(algebra, v):
    if v not in algebra.quiver.vertices:
        raise ParseError(f"unknown vertex {v!r}")


def _eval_rep(node, algebra, generators):
    kind = node[0]
    if kind == "sum":
        out = []
        for t in node[1]:
            out.extend(_eval_rep(t, algebra, generators))
        return out
    if kind == "scale":
        inner = _eval_rep(node[2], algebra, generators)
        return [(rep, mult * node[1]) for rep, mult in inner]
    if kind == "rep":
        return [(_parse_rep_literal(node[1], algebra), 1)]
    name, args = node[1], node[2]
    if name == "simple":
        _check_vertex(algebra, args[0])
        return [(reps.simple(algebra, args[0]), 1)]
    if name == "proj":
        _check_vertex(algebra, args[0])
        return [(reps.projective(algebra, args[0]), 1)]
    if name == "inj":
        _check_vertex(algebra, args[0])
        return [(reps.injective(algebra, args[0]), 1)]
    if name == "path":
        calc = calculus(algebra)
        return [(reps.rep_of_class(calc.class_of(algebra.path(args[0]))), 1)]
    if name in generators:
        return [(generators[name](algebra, args), 1)]
    raise ParseError(f"unknown module atom {name!r}")


def _parse_rep_literal(body, algebra):
    sections = [s.strip() for s in body.split(";") if s.strip()]
    if not sections:
        raise ParseError("empty rep literal")
    dims = {}
    for tok in sections[0].split():
        if ":" not in tok:
            raise ParseError(f"bad dimension token {tok!r} (want v:dim)")
        v, d = tok.split(":", 1)
        _check_vertex(algebra, v)
        try:
            dims[v] = int(d)
        except ValueError:
            raise ParseError(f"bad dimension {d!r}")
    mats = {}
    for section in sections[1:]:
        if "=" not in section:
            raise ParseError(f"bad matrix section {section!r}")
        name, mat_text = section.split("=", 1)
        name = name.strip()
        if name not in algebra.quiver.arrow_by_name:
            raise ParseError(f"unknown arrow {name!r} in rep literal")
        mats[name] = _parse_matrix(mat_text.strip())
    try:
        rep = reps.Representation(algebra, dims, mats, name="rep-literal")
    except ValueError as exc:
        raise ParseError(str(exc))
    rep.check_relations()
    return rep


def _parse_matrix(text):
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ParseError(f"matrix must be [[...],[...]], got {text!r}")
    inner = text[1:-1].strip()
    rows = []
    depth = 0
    buf = ""
    for ch in inner:
        if ch == "[":
            depth += 1
            if depth == 1:
                buf = ""
                continue
        if ch == "]":
            depth -= 1
            if depth == 0:
                row = []
                for entry in buf.split(","):
                    entry = entry.strip()
                    if entry:
                        try:
                            row.append(Fraction(entry))
                        except (ValueError, ZeroDivisionError):
                            raise ParseError(f"bad matrix entry {entry!r}")
                rows.append(row)
                continue
        if depth >= 1:
            buf += ch
    return rows
