"""
compalg-kit: exact projective geometry over split composition algebras.

Subpackages:
- foundation: scalars over Q and F_p, exact linear algebra, sparse polynomials
- compalg:    the split algebras R, C, H, O and their multiplication operators
- jordan:     Hermitian Jordan algebras, rank one, Veronese map, octonionic plane
- classical:  the matrix models V^n_a and their structure groups
- calgmod:    right submodules of A^n, Grassmannians, duality, enumeration
- cubic27:    the 27 points / 45 planes model and the E6 cubic form
- verify:     YAML-registered check suites with a JSONL evidence log
- cli:        the compalg-kit command line
"""

__version__ = "0.3.0"
