"""Exact lattice-point machinery around rational staircases.

Subpackages by topic: ``numeric`` (integer helpers and unimodular maps),
``sequences`` (periodic 0,1-sequences and their characterizations),
``staircase`` (point-set windows and the Euclid-style recursion),
``genfun`` (short rational generating functions and windowed expansion),
``barvinok`` (triangle and cone representations), ``carlitz``
(Dedekind-Carlitz polynomials and fundamental parallelepipeds), ``white``
(empty lattice tetrahedra), ``cli`` (command-line front end).
"""

from .backend import BACKEND
from .errors import DomainError, ExpansionDirectionError, UndefinedParameterError
from .numeric import (AffineLatticeMap, EuclidChain, SlopePair, apply_map,
                      euclid_chain, floor_div_mod)
from .sequences import (PeriodicIntSeq, beatty, beatty_period, block_sequence,
                        is_balanced, is_evenly_distributed,
                        is_recursively_balanced, is_sturmian,
                        is_swap_symmetric, reduce, shift_equivalent, swap)
from .staircase import (LineSpec, PointWindow, column_counts, in_halfplane,
                        line_lattice_point, pipe_membership, reflect, render,
                        staircase_by_recursion, staircase_window)
from .genfun import (GFTerm, LaurentWindow, RationalGF, gf_add, gf_expand,
                     gf_from_json, gf_interval, gf_mul, gf_scale,
                     gf_substitute, gf_to_json, gf_to_text)
from .barvinok import (ConeSpec, TriangleSpec, gf_closed_triangle, gf_cone,
                       gf_cone_pieces, gf_half_open_triangle,
                       gf_half_open_triangle_pieces, triangle_points_brute)
from .carlitz import (CarlitzPolynomial, ParallelepipedSpec, carlitz_naive,
                      carlitz_short, parallelepiped_by_recursion,
                      parallelepiped_gf, parallelepiped_points_brute)
from .white import (TetraSpec, Verdict, classify, f_function, g_function,
                    is_clean, is_empty, reeve_criterion, tetra_points_brute)

__version__ = "0.1.0"
