"""Homological invariants of finite-dimensional bound quiver algebras.

Submodules:

* quiver         — quivers, paths, SCC/condensation analyses
* algebra        — bound quiver algebras (truncated / monomial / relations)
* pathmodules    — path-module classes, combinatorial syzygy calculus
* reps           — exact-field quiver representations, Hom, iso, syzygies
* gorenstein     — perfect paths, Gorenstein-projectives, Co-Gorenstein
* igusa_todorov  — phi, phi-dimension bounds, the triangular reduction
* algfile/modexpr/corpus/cli — file formats, expressions, shipped examples
"""

__version__ = "0.1.0"
