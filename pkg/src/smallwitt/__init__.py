"""Projective plane of order 3, its 6-set census, and the small Witt design S(5,6,12)."""

from smallwitt.automorphisms import aut_group_summary, extend_base_image, is_automorphism
from smallwitt.census import SixSetType, census, classify_by_trisecants, classify_structurally
from smallwitt.designs import Design, read_design, verify_steiner, write_design
from smallwitt.gf import FieldElement, ff_inv
from smallwitt.plane import Plane, build_plane
from smallwitt.witt import BlockType, WittDesign, block_containing, build_witt

__all__ = [
    "BlockType",
    "Design",
    "FieldElement",
    "Plane",
    "SixSetType",
    "WittDesign",
    "aut_group_summary",
    "block_containing",
    "build_plane",
    "build_witt",
    "census",
    "classify_by_trisecants",
    "classify_structurally",
    "extend_base_image",
    "ff_inv",
    "is_automorphism",
    "read_design",
    "verify_steiner",
    "write_design",
]
