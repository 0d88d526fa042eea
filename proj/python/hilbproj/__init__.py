"""Exact computations around projections of smooth hypersurfaces.

Fiber multiplicity profiles, the combinatorics and local structure of the
fibers of the relative Hilbert scheme of a projection, its genus by closed
formula and by Hurwitz data, the intersection table and Mori cone of the
associated three-ray family, and Frobenius cycle-type sampling for the
projection's monodromy group. All arithmetic is exact; reports with mixed
content are returned as plain dicts mirroring the CLI's JSON schema.
"""

import json as _json

from ._core import (
    DomainError,
    Hypersurface,
    InternalConsistencyError,
    PolynomialParseError,
    UnsupportedError,
    branch_curve_nodes,
    brute_hom_dim,
    multiplicity_bound,
    enumerate_fiber_points,
    fiber_profile,
    hilb_genus,
    hurwitz_genus,
    is_fano,
    is_general_center,
    iso_obstruction_identity,
    pi_smooth_at,
    plane_vmrt_arith_genus,
    punctual_hom_ext_dim,
    ramification_count_over_branch,
    ramification_index,
    singular_count_on_line,
    surface_profile_expected,
    tangent_dim,
    tau_is_isomorphism,
    vmrt_degree,
)
from . import _core

__all__ = [
    "Hypersurface",
    "PolynomialParseError",
    "DomainError",
    "UnsupportedError",
    "InternalConsistencyError",
    "fiber_profile",
    "singular_count_on_line",
    "pencil_report",
    "is_general_center",
    "multiplicity_bound",
    "surface_profile_expected",
    "enumerate_fiber_points",
    "tangent_dim",
    "pi_smooth_at",
    "ramification_index",
    "punctual_hom_ext_dim",
    "brute_hom_dim",
    "hilb_report",
    "ramification_count_over_branch",
    "hilb_genus",
    "hurwitz_genus",
    "genus_report",
    "vmrt_degree",
    "plane_vmrt_arith_genus",
    "tau_is_isomorphism",
    "iso_obstruction_identity",
    "branch_curve_nodes",
    "cone_report",
    "is_fano",
    "classify_fano_threefolds",
    "monodromy_report",
]


def pencil_report(hypersurface, center, certify=False, emit_disc=False):
    """Discriminant data of the pencil of lines through the center (m = 1)."""
    return _json.loads(_core.pencil_report_json(hypersurface, center, certify, emit_disc))


def hilb_report(profile, a):
    """Fiber points over a line with the given profile, with local data."""
    return _json.loads(_core.hilb_report_json(list(profile), a))


def genus_report(hypersurface, center, a):
    """Genus assembled from actual pencil data; center must certify general."""
    return _json.loads(_core.genus_report_json(hypersurface, center, a))


def cone_report(n, a, d, i_Z=None, delta=1):
    """Pairing table, extremal rays, and the Fano test for the 3-ray family."""
    return _json.loads(_core.cone_report_json(n, a, d, -1 if i_Z is None else i_Z, delta))


def classify_fano_threefolds():
    """All (d, a) giving a Fano threefold, flagged by tau_is_isomorphism."""
    return _json.loads(_core.classify_fano_threefolds_json())


def monodromy_report(hypersurface, center, samples, seed, prime_bound=500):
    """Seeded Frobenius cycle-type sampling; evidence, never proof."""
    return _json.loads(
        _core.monodromy_report_json(hypersurface, center, samples, seed, prime_bound)
    )
