"""Geometry of conjugation in split groups of Euclidean isometries.

A split group ``H = T_H x| H_0`` is given by a Gram form and integer
generators of its point group, in the basis of its translation lattice.
"""

from .coconj import (centralizer, coconjugation_set, is_conjugate, spherical_coconj,
                     translation_compatible_part)
from .conjgeo import (component_count, component_stabilizer, components, conjugacy_class,
                      filling_check, fix_lattice, fix_set, mod_set, mov_set)
from .group import Group, GroupSpec, Isometry, validate_and_close
from .linalg import AffineSublattice, Sublattice, hnf, snf, solve_integer

__version__ = "0.1.0"
