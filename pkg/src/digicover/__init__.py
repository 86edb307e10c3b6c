"""Verification toolkit for morphisms of finite digital images.

Images are finite subsets of Z^d with c_u or explicit adjacency; maps between
them are classified as coverings, local / PL / WL isomorphisms and the two
pseudo-covering variants, with witnesses that can be replayed.
"""

from .classifiers import (
    ClassVerdict,
    Kind,
    Sheet,
    Violation,
    check_covering,
    check_han_pseudocover,
    check_local_iso,
    check_pak_pseudocover,
    check_pl_iso,
    check_wl_iso,
    classify,
    replay,
)
from .image import (
    CU,
    DigitalImage,
    DigitalTopologyError,
    Explicit,
    InvalidImageError,
    Point,
    PointNotInImageError,
    adjacent,
    adjeq,
    cu_adjacent,
    cycle_point,
    gen_cycle,
    gen_cycle_rect,
    gen_interval,
    gen_window,
    is_connected,
    is_path,
    is_simple_closed_curve,
    neighborhood_closed,
    neighbors_strict,
)
from .lifting import PathLift, ULPReport, check_unique_path_lifting, enumerate_lifts
from .maps import (
    DigitalMap,
    InvalidMapError,
    SubImage,
    compose,
    identity,
    is_continuous,
    is_injective,
    is_isomorphism,
    is_surjective,
    restrict,
    restrict_to,
    sub_image,
    subgraphs_isomorphic,
)
from .paper_suite import (
    build_doubling_map,
    build_window_map,
    check_assertion_3_10,
    verify_corollary_3_11,
    verify_pak_separation,
)

__version__ = "0.1.0"
