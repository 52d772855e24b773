"""Spectra of rigidity and stiffness matrices of bar frameworks."""

import json

from ._rigidspec import (
    Graph,
    __version__,
    circle_placement,
    circle_spectrum,
    cli,
    clustered_spectrum,
    complete_graph,
    crosspolytope_placement,
    crosspolytope_spectrum,
    eigenvalues,
    k4_witness_bound,
    kyfan_projection,
    lower_stiffness,
    random_sphere_placement,
    regular_simplex,
    rigidity_matrix,
    simplex_spectrum,
    spectral_gap,
    stiffness,
    tetrahedron_h,
    tetrahedron_spectrum,
    turan_graph,
    turan_simplex_placement,
    turan_simplex_spectrum,
)
from . import _rigidspec


def bound_report(n, d):
    return json.loads(_rigidspec._bound_report(n, d))


def gap_ascent(graph, d, restarts=16, max_iters=400, seed=1, gauge="center-unit-scale", threads=1):
    return json.loads(_rigidspec._gap_ascent(graph, d, restarts, max_iters, seed, gauge, threads))


def verify(suite="all", grid="", samples=-1, seed=1, threads=1):
    return json.loads(_rigidspec._verify(suite, grid, samples, seed, threads))


def conjecture_probe(tag, samples=-1, seed=1):
    return json.loads(_rigidspec._conjecture(tag, samples, seed))
