"""Exact computations with quivers of smash products and skew group algebras,
the functors R_c and T_c as matrix maps, and Schofield semi-invariants."""

__version__ = "0.1.0"

from .quiver import Quiver, Representation, kronecker_quiver, subspace_quiver  # noqa: F401
from .qg import build_qg_finite, build_qg_gl, natural_gl_datum, r_map  # noqa: F401
from .smash import build_idempotent_data, rc_apply, tc_apply  # noqa: F401
from .schofield import schofield_c, transformation_check  # noqa: F401
