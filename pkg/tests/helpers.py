"""Shared test utilities: deterministic random instance generators and the
exhaustive small-quiver enumeration used by the acceptance suite."""

import random
from itertools import combinations_with_replacement, permutations

from quiverhom.algebra import MonomialIdeal, TruncatedIdeal, build_algebra
from quiverhom.errors import InfiniteDimensional, NotAdmissible, ParseError
from quiverhom.quiver import Path, Quiver


def random_quiver(rng, max_vertices=5, max_arrows=8):
    nv = rng.randint(1, max_vertices)
    verts = [str(i + 1) for i in range(nv)]
    na = rng.randint(1, max_arrows)
    arrows = [(f"x{i}", rng.choice(verts), rng.choice(verts)) for i in range(na)]
    return Quiver(verts, arrows)


def _paths_of_length(quiver, length):
    out = [Path.trivial(quiver, v) for v in quiver.vertices]
    for _ in range(length):
        out = [p.then(a.name) for p in out for a in quiver.arrows_from(p.target)]
    return out


def random_monomial_algebra(rng, max_vertices=4, max_arrows=6, max_dim=80):
    """A finite-dimensional monomial algebra; retries until the probe bound
    accepts and the dimension stays desk-scale."""
    while True:
        q = random_quiver(rng, max_vertices, max_arrows)
        candidates = _paths_of_length(q, 2) + _paths_of_length(q, 3)
        candidates = [p for p in candidates if p.length >= 2]
        if not candidates:
            # acyclic with short paths: empty ideal is fine
            gens = []
        else:
            count = rng.randint(1, min(5, len(candidates)))
            gens = rng.sample(candidates, count)
        try:
            algebra = build_algebra(q, MonomialIdeal(gens), max_basis=max_dim)
        except (InfiniteDimensional, NotAdmissible, ParseError):
            continue
        if not algebra.nonzero_nontrivial_paths():
            continue
        return algebra


def random_acyclic_truncated(rng, max_vertices=6, max_arrows=10, ks=(2, 3, 4)):
    while True:
        nv = rng.randint(2, max_vertices)
        verts = [str(i + 1) for i in range(nv)]
        na = rng.randint(1, max_arrows)
        arrows = []
        for i in range(na):
            a = rng.randint(1, nv - 1)
            b = rng.randint(a + 1, nv)  # strictly forward: acyclic
            arrows.append((f"x{i}", str(a), str(b)))
        k = rng.choice(ks)
        try:
            return build_algebra(Quiver(verts, arrows), TruncatedIdeal(k))
        except ParseError:
            continue


def random_nonzero_path(rng, algebra):
    paths = algebra.nonzero_nontrivial_paths()
    return rng.choice(paths)


def exhaustive_truncated_family(max_vertices=4, max_arrows=6, ks=(2, 3)):
    """All connected quivers with <= max_vertices vertices and <= max_arrows
    arrows, one representative per vertex-relabeling orbit, paired with each
    truncation exponent.  The verdicts under test are invariant under
    renaming, so orbit representatives are exhaustive for the property."""
    for nv in range(1, max_vertices + 1):
        pairs = [(i, j) for i in range(nv) for j in range(nv)]
        perms = list(permutations(range(nv)))
        for na in range(1, max_arrows + 1):
            for combo in combinations_with_replacement(pairs, na):
                best = min(
                    tuple(sorted((p[i], p[j]) for i, j in combo)) for p in perms
                )
                if best != combo:
                    continue
                adj = {v: set() for v in range(nv)}
                for i, j in combo:
                    adj[i].add(j)
                    adj[j].add(i)
                seen = {0}
                stack = [0]
                while stack:
                    for w in adj[stack.pop()]:
                        if w not in seen:
                            seen.add(w)
                            stack.append(w)
                if len(seen) != nv:
                    continue
                verts = [str(v + 1) for v in range(nv)]
                arrows = [
                    (f"x{idx}", str(i + 1), str(j + 1))
                    for idx, (i, j) in enumerate(combo)
                ]
                quiver = Quiver(verts, arrows)
                for k in ks:
                    yield build_algebra(quiver, TruncatedIdeal(k))


def seeded(seed):
    return random.Random(seed)
