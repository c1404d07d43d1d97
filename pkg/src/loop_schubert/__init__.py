"""Exact computations with affine Schubert polynomials for loop groups of SU(n).

Modules:
    weyl         permutations in window notation, reduced words, S_n
    affine       periodic permutations, coweights, minimal coset representatives
    polyring     sparse exact polynomials, normal forms modulo fixed ideals
    demazure     divided differences, double/single Schubert polynomials
    affschubert  the point-class pipeline producing S^ in Q[h_1..h_{n-1}]
    alcove       root systems of any finite type and anti-dominant factorization
    golden       reference tables and a replay harness
    cli          the command line
"""

from .affine import AffineElement, Coweight, min_coset_rep, parse_affine, parse_coweight
from .affschubert import affine_schubert, run_pipeline, verify_theorem_A
from .polyring import Polynomial, from_json, from_text, to_json, to_text
from .weyl import Permutation

__version__ = "0.1.0"

__all__ = [
    "AffineElement",
    "Coweight",
    "Permutation",
    "Polynomial",
    "affine_schubert",
    "from_json",
    "from_text",
    "min_coset_rep",
    "parse_affine",
    "parse_coweight",
    "run_pipeline",
    "to_json",
    "to_text",
    "verify_theorem_A",
]
