"""Finite-dimensional bound quiver algebras kQ/I.

Three ideal shapes are supported:

* ``TruncatedIdeal(k)``   — I = J^k (all paths of length >= k vanish);
* ``MonomialIdeal(gens)`` — I generated by paths of length >= 2;
* ``RelationsIdeal(...)`` — rational linear combinations of equal-endpoint,
  equal-length paths, together with a nilpotency bound N with J^N inside I.

For the first two, the basis is the set of nonzero paths.  For the third the
basis is a set of path cosets selected degree by degree by exact row
reduction of the ideal's span; J^N <= I is verified (not assumed) by checking
that the degree-N layer of the span covers every degree-N path, which is a
complete criterion because the relations are length-homogeneous.

Products are always function-order: multiply(x, y) traverses y first, then x.
Algebras are immutable after build.
"""

import random
from fractions import Fraction

from . import linalg
from .errors import (
    BadRelation,
    InfiniteDimensional,
    InternalInvariantError,
    NotAdmissible,
    UnsupportedIdeal,
    ZeroPath,
)
from .fields import QQ
from .quiver import Path, compose

ASSOCIATIVITY_SAMPLES = 500


class TruncatedIdeal:
    kind = "truncated"

    def __init__(self, k):
        if k < 2:
            raise NotAdmissible(f"truncation exponent must be >= 2, got {k}")
        self.k = k

    def __repr__(self):
        return f"TruncatedIdeal(k={self.k})"


class MonomialIdeal:
    kind = "monomial"

    def __init__(self, generators):
        generators = tuple(generators)
        for g in generators:
            if g.length < 2:
                raise NotAdmissible(
                    f"monomial generator {g} has length {g.length}; admissibility needs length >= 2"
                )
        self.generators = generators

    def __repr__(self):
        return f"MonomialIdeal({[str(g) for g in self.generators]})"


class Relation:
    """A rational linear combination of paths sharing source, target and length."""

    def __init__(self, terms):
        terms = [(Fraction(c), p) for c, p in terms]
        terms = [(c, p) for c, p in terms if c != 0]
        if not terms:
            raise BadRelation("empty relation")
        p0 = terms[0][1]
        for _, p in terms:
            if p.length < 2:
                raise BadRelation(f"relation term {p} has length {p.length} < 2")
            if (p.source, p.target) != (p0.source, p0.target):
                raise BadRelation("relation mixes endpoints")
            if p.length != p0.length:
                raise BadRelation(
                    "relation mixes path lengths; only length-homogeneous relations are supported"
                )
        self.terms = tuple(terms)
        self.source = p0.source
        self.target = p0.target
        self.degree = p0.length

    def __repr__(self):
        return " + ".join(f"{c}*{p}" for c, p in self.terms)


class RelationsIdeal:
    kind = "relations"

    def __init__(self, relations, nilpotency, radical_power_included=False):
        """radical_power_included: the ideal contains J^nilpotency as an
        explicit generator set; otherwise J^nilpotency <= I is verified by
        row reduction at degree nilpotency and the build fails loudly when
        the bound is wrong."""
        if nilpotency < 2:
            raise NotAdmissible(f"nilpotency bound must be >= 2, got {nilpotency}")
        self.relations = tuple(relations)
        self.nilpotency = nilpotency
        self.radical_power_included = radical_power_included

    def __repr__(self):
        extra = f" + J^{self.nilpotency}" if self.radical_power_included else ""
        return f"RelationsIdeal({len(self.relations)} relations{extra}, N={self.nilpotency})"


def _all_paths_up_to(quiver, max_len):
    """All paths of length <= max_len, grouped by length."""
    by_len = [[Path.trivial(quiver, v) for v in quiver.vertices]]
    for _ in range(max_len):
        nxt = []
        for p in by_len[-1]:
            for a in quiver.arrows_from(p.target):
                nxt.append(p.then(a.name))
        by_len.append(nxt)
    return by_len


class BoundQuiverAlgebra:
    """kQ/I with an enumerated basis and exact structure constants."""

    def __init__(self, quiver, ideal, field=QQ, check=True, max_basis=None):
        """max_basis: optional hard cap on the basis enumeration; exceeding it
        aborts with InfiniteDimensional (used to keep sampled instances at
        desk scale before the probe bound is reached)."""
        self.quiver = quiver
        self.ideal = ideal
        self.field = field
        self.kind = ideal.kind
        self.max_basis = max_basis
        self._product_cache = {}
        if self.kind == "truncated":
            self.nilpotency = ideal.k
            self._build_monomial_like()
        elif self.kind == "monomial":
            self._zero_patterns = {g.arrows for g in ideal.generators}
            self._build_monomial_like()
            self.nilpotency = max((p.length for p in self.basis), default=0) + 1
        elif self.kind == "relations":
            self.nilpotency = ideal.nilpotency
            self._build_relations()
        else:
            raise UnsupportedIdeal(f"unknown ideal kind {ideal.kind!r}")
        self._index = {p: i for i, p in enumerate(self.basis)}
        self._from = {v: [] for v in quiver.vertices}
        self._into = {v: [] for v in quiver.vertices}
        for i, p in enumerate(self.basis):
            self._from[p.source].append(i)
            self._into[p.target].append(i)
        self.dimension = len(self.basis)
        if check:
            self._check_relations_vanish()
            self._spot_check_associativity()

    # -- construction --------------------------------------------------

    def _path_is_zero_monomial_like(self, arrows):
        if self.kind == "truncated":
            return len(arrows) >= self.ideal.k
        for pat in self._zero_patterns:
            m = len(pat)
            if m <= len(arrows):
                for i in range(len(arrows) - m + 1):
                    if arrows[i : i + m] == pat:
                        return True
        return False

    def _build_monomial_like(self):
        if self.kind == "truncated":
            bound = self.ideal.k - 1
        else:
            gens = self.ideal.generators
            if not gens:
                # no relations: finite-dimensional only if acyclic
                from .quiver import analyze

                if not analyze(self.quiver).is_acyclic:
                    raise InfiniteDimensional("path algebra of a cyclic quiver with empty ideal")
                bound = len(self.quiver.vertices)
            else:
                bound = len(self.quiver.arrows) * max(g.length for g in gens)
        basis = [Path.trivial(self.quiver, v) for v in self.quiver.vertices]
        frontier = list(basis)
        while frontier:
            nxt = []
            for p in frontier:
                for a in self.quiver.arrows_from(p.target):
                    q = p.then(a.name)
                    if self._path_is_zero_monomial_like(q.arrows):
                        continue
                    if q.length > bound:
                        raise InfiniteDimensional(
                            f"nonzero path of length {q.length} exceeds the probe bound {bound}"
                        )
                    nxt.append(q)
            basis.extend(nxt)
            if self.max_basis is not None and len(basis) > self.max_basis:
                raise InfiniteDimensional(
                    f"basis enumeration exceeded the requested cap {self.max_basis}"
                )
            frontier = nxt
        self.basis = basis

    def _build_relations(self):
        N = self.nilpotency
        F = self.field
        by_len = _all_paths_up_to(self.quiver, N)
        self._reduction = {}
        basis = list(by_len[0]) + list(by_len[1])
        for p in by_len[0] + by_len[1]:
            self._reduction[(p.arrows, p.vertex)] = [(p, F.one)]

        for degree in range(2, N + 1):
            # group the degree-d paths by (source, target)
            blocks = {}
            for p in by_len[degree]:
                blocks.setdefault((p.source, p.target), []).append(p)
            spans = {key: [] for key in blocks}
            for rel in self.ideal.relations:
                pad = degree - rel.degree
                if pad < 0:
                    continue
                for lpre in range(pad + 1):
                    lsuf = pad - lpre
                    prefixes = [p for p in by_len[lpre] if p.target == rel.source]
                    suffixes = [p for p in by_len[lsuf] if p.source == rel.target]
                    for pre in prefixes:
                        for suf in suffixes:
                            key = (pre.source, suf.target)
                            cols = blocks.get(key)
                            if cols is None:
                                continue
                            pos = {q.arrows: j for j, q in enumerate(cols)}
                            vec = [F.zero] * len(cols)
                            for c, term in rel.terms:
                                comp = pre.arrows + term.arrows + suf.arrows
                                vec[pos[comp]] = F.add(vec[pos[comp]], F.of(c))
                            spans[key].append(vec)
            for key, cols in sorted(blocks.items()):
                rows = spans.get(key, [])
                if rows:
                    red, pivots = linalg.rref(F, rows)
                else:
                    red, pivots = [], []
                pivot_set = set(pivots)
                if degree == N:
                    if self.ideal.radical_power_included:
                        continue
                    if len(pivots) != len(cols):
                        missing = [str(cols[j]) for j in range(len(cols)) if j not in pivot_set][:3]
                        raise NotAdmissible(
                            f"J^{N} is not contained in the ideal: degree-{N} path(s) "
                            f"{missing} survive the relation span"
                        )
                    continue
                kept = [cols[j] for j in range(len(cols)) if j not in pivot_set]
                for q in kept:
                    self._reduction[(q.arrows, q.vertex)] = [(q, F.one)]
                for i, pc in enumerate(pivots):
                    expansion = []
                    for j in range(len(cols)):
                        if j in pivot_set:
                            continue
                        coeff = red[i][j]
                        if not F.is_zero(coeff):
                            expansion.append((cols[j], F.neg(coeff)))
                    self._reduction[(cols[pc].arrows, cols[pc].vertex)] = expansion
                if degree < N:
                    basis.extend(kept)
        self.basis = basis

    # -- queries --------------------------------------------------------

    def path(self, text_or_arrows):
        """Build a Path from 'a.b.c' text, an arrow-name sequence, or 'e_v'."""
        if isinstance(text_or_arrows, Path):
            return text_or_arrows
        if isinstance(text_or_arrows, str):
            if text_or_arrows.startswith("e_"):
                return Path.trivial(self.quiver, text_or_arrows[2:])
            parts = tuple(text_or_arrows.split("."))
        else:
            parts = tuple(text_or_arrows)
        return Path(self.quiver, parts)

    def index_of(self, path):
        return self._index[path]

    def basis_indices_from(self, v):
        return self._from[v]

    def basis_indices_into(self, v):
        return self._into[v]

    def trivial_index(self, v):
        return self._index[Path.trivial(self.quiver, v)]

    def path_is_zero(self, path):
        if self.kind in ("truncated", "monomial"):
            return self._path_is_zero_monomial_like(path.arrows)
        if path.length >= self.nilpotency:
            return True
        return not self._reduction[(path.arrows, path.vertex)]

    def reduce_path(self, path):
        """Expand a path into the basis: list of (basis_index, coeff)."""
        if self.kind in ("truncated", "monomial"):
            if self._path_is_zero_monomial_like(path.arrows):
                return []
            return [(self._index[path], self.field.one)]
        if path.length >= self.nilpotency:
            return []
        return [(self._index[q], c) for q, c in self._reduction[(path.arrows, path.vertex)]]

    def product_indices(self, i, j):
        """basis_i * basis_j in function order (traverse j first), as a
        sparse [(index, coeff)] vector; memoized."""
        key = (i, j)
        cached = self._product_cache.get(key)
        if cached is not None:
            return cached
        p, q = self.basis[i], self.basis[j]
        if p.source != q.target:
            result = []
        else:
            result = self.reduce_path(compose(p, q))
        self._product_cache[key] = result
        return result

    def multiply(self, x, y):
        """Bilinear product of sparse vectors {index: coeff}."""
        F = self.field
        out = {}
        for i, ci in x.items():
            if F.is_zero(ci):
                continue
            for j, cj in y.items():
                if F.is_zero(cj):
                    continue
                for k, ck in self.product_indices(i, j):
                    val = F.add(out.get(k, F.zero), F.mul(F.mul(ci, cj), ck))
                    out[k] = val
        return {k: v for k, v in out.items() if not F.is_zero(v)}

    def vector_of_path(self, path):
        return {i: c for i, c in self.reduce_path(path)}

    @property
    def is_monomial_like(self):
        return self.kind in ("truncated", "monomial")

    def tuple_is_zero(self, arrows):
        """Zero test on a traversal-order arrow tuple (monomial/truncated only)."""
        if not self.is_monomial_like:
            raise UnsupportedIdeal("tuple zero test needs a monomial or truncated ideal")
        return self._path_is_zero_monomial_like(tuple(arrows))

    def nonzero_nontrivial_paths(self):
        if not self.is_monomial_like:
            raise UnsupportedIdeal("path enumeration needs a monomial or truncated ideal")
        return [p for p in self.basis if not p.is_trivial()]

    # -- annihilators ----------------------------------------------------

    def annihilator_sets(self, p):
        """Minimal annihilating paths of a nonzero nontrivial path p.

        L(p): right-minimal nonzero q with s(q) = t(p) and q*p = 0 — the
        minimal continuations killing p, i.e. the syzygy generators of Ap.
        R(p): left-minimal nonzero q with t(q) = s(p) and p*q = 0.
        Minimality: no proper initial (for L) / final (for R) traversal
        segment of q lies in the same annihilating set.
        """
        if not self.is_monomial_like:
            raise UnsupportedIdeal("annihilator sets need a monomial or truncated ideal")
        p = self.path(p)
        if p.is_trivial():
            raise ZeroPath(f"{p} is trivial")
        if self.path_is_zero(p):
            raise ZeroPath(f"{p} is zero in the algebra")
        s_left = [
            q
            for q in self.nonzero_nontrivial_paths()
            if q.source == p.target and self._path_is_zero_monomial_like(p.arrows + q.arrows)
        ]
        s_right = [
            q
            for q in self.nonzero_nontrivial_paths()
            if q.target == p.source and self._path_is_zero_monomial_like(q.arrows + p.arrows)
        ]
        left_set = {q.arrows for q in s_left}
        right_set = {q.arrows for q in s_right}
        L = [
            q
            for q in s_left
            if not any(q.arrows[:j] in left_set for j in range(1, q.length))
        ]
        R = [
            q
            for q in s_right
            if not any(q.arrows[q.length - j :] in right_set for j in range(1, q.length))
        ]
        key = lambda q: (q.length, q.arrows)
        return sorted(L, key=key), sorted(R, key=key)

    # -- self checks ------------------------------------------------------

    def _check_relations_vanish(self):
        if self.kind != "relations":
            return
        F = self.field
        for rel in self.ideal.relations:
            acc = {}
            for c, term in rel.terms:
                for i, coeff in self.reduce_path(term):
                    acc[i] = F.add(acc.get(i, F.zero), F.mul(F.of(c), coeff))
            if any(not F.is_zero(v) for v in acc.values()):
                raise InternalInvariantError(f"relation {rel} does not vanish in the quotient")

    def _spot_check_associativity(self):
        rng = random.Random(0)
        n = self.dimension
        if n == 0:
            return
        F = self.field
        for _ in range(ASSOCIATIVITY_SAMPLES):
            i, j, k = (rng.randrange(n) for _ in range(3))
            xy = {t: c for t, c in self.product_indices(i, j)}
            yz = {t: c for t, c in self.product_indices(j, k)}
            lhs = self.multiply(xy, {k: F.one})
            rhs = self.multiply({i: F.one}, yz)
            if lhs != rhs:
                raise InternalInvariantError(
                    f"associativity failure on basis triple ({i},{j},{k})"
                )

    # -- serialization -----------------------------------------------------

    def structure_constants_json(self):
        """Dense dump of all nonzero structure constants (debug aid)."""
        entries = []
        for i in range(self.dimension):
            for j in range(self.dimension):
                for k, c in self.product_indices(i, j):
                    entries.append([i, j, k, self.field.fmt(c)])
        return {
            "basis": [str(p) for p in self.basis],
            "entries": entries,
        }

    def __repr__(self):
        return (
            f"BoundQuiverAlgebra({self.kind}, dim={self.dimension}, "
            f"field={self.field.name})"
        )


def build_algebra(quiver, ideal, field=QQ, check=True, max_basis=None):
    return BoundQuiverAlgebra(quiver, ideal, field=field, check=check,
                              max_basis=max_basis)
