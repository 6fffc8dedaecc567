"""Complete 4-general sets in finite projective spaces: constructions, verification and bounds."""

from .gf import Field, gf, make_field
from .projspace import PointSet, Space, pg
from .genset import VerifyReport, NotFourGeneralError, verify_4general, verify_complete, extension_candidates
from .aut import aut_order, are_equivalent

__version__ = "0.1.0"

__all__ = [
    "Field",
    "gf",
    "make_field",
    "PointSet",
    "Space",
    "pg",
    "VerifyReport",
    "NotFourGeneralError",
    "verify_4general",
    "verify_complete",
    "extension_candidates",
    "aut_order",
    "are_equivalent",
]
