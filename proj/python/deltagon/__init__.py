"""Delta side length polyhedra for rank 2 root systems.

Thin wrapper over the compiled _core module. Exact rationals cross the
boundary as strings ("p/q" or "p"); matrices are nested lists. The compiled
module sits inside the package when installed, or next to it on PYTHONPATH
in a build tree.
"""

try:
    from ._core import (  # type: ignore[attr-defined]
        apartment_semistability,
        construct_polygon,
        data_table_checksum,
        delta_length_X,
        delta_length_p,
        extreme_rays,
        grassmannian_semistability,
        ideal_polygon,
        inequalities,
        membership,
        root_systems,
        sample_thompson,
        schubert_basis,
        weyl_group,
    )
except ImportError:
    from _core import (  # type: ignore[no-redef]
        apartment_semistability,
        construct_polygon,
        data_table_checksum,
        delta_length_X,
        delta_length_p,
        extreme_rays,
        grassmannian_semistability,
        ideal_polygon,
        inequalities,
        membership,
        root_systems,
        sample_thompson,
        schubert_basis,
        weyl_group,
    )

from fractions import Fraction


def to_fraction(s):
    """Parse a rational string from the core into a Fraction."""
    return Fraction(s)


def side_lengths_member(root_system, sides):
    """True when the given dominant side lengths close up to a polygon."""
    return membership(root_system, [[str(x) for x in side] for side in sides])["member"]


__all__ = [
    "apartment_semistability",
    "construct_polygon",
    "data_table_checksum",
    "delta_length_X",
    "delta_length_p",
    "extreme_rays",
    "grassmannian_semistability",
    "ideal_polygon",
    "inequalities",
    "membership",
    "root_systems",
    "sample_thompson",
    "schubert_basis",
    "side_lengths_member",
    "to_fraction",
    "weyl_group",
]
