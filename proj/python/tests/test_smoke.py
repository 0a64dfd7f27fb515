import math

import numpy as np
import pytest

import isoembed as ie


def test_path_embeds_and_claw_does_not():
    assert ie.is_embeddable(ie.path(5))["embeddable"]
    r = ie.is_embeddable(ie.claw())
    assert not r["embeddable"]
    assert abs(r["witness"].sum()) < 1e-12


def test_path_kernels_and_traces():
    m = ie.path(3)
    np.testing.assert_array_equal(ie.kernel_at_base(m, 1), [[2, 0, -2], [0, 0, 0], [-2, 0, 2]])
    assert ie.kernel_trace_profile(m) == [10, 4, 10]


def test_embedding_round_trip():
    m = ie.random_euclidean(6, 3, 11)
    e = ie.embed_coordinates(m)
    assert e.coords.shape[0] == 6
    assert ie.verify_isometry(e, m) < 1e-6


def test_metric_validation_errors_carry_kind():
    with pytest.raises(ie.IsoembedError) as info:
        ie.MetricSpace(np.array([[0, 1, 3], [1, 0, 1], [3, 1, 0]], dtype=float))
    assert info.value.kind == "TriangleViolation"


def test_critical_graph_and_structure():
    g = ie.critical_graph(ie.snk(6, 3))
    order, pivot = ie.match_pivot_structure(g)
    assert pivot == 3
    assert ie.connectivity_report(g)["is_2_connected"]
    assert ie.classify_4point(ie.pythagorean(48))["class"] == "K4MinusE"


def test_theorem_small():
    r = ie.verify_unweighted_theorem(5)
    assert r["counterexamples"] == []
    assert r["graphs_checked"] == 772


def test_geometric_spectrum():
    p3 = ie.Graph.unweighted(3, [(0, 1), (1, 2)])
    r = ie.geometric_fiedler(p3, ie.complete(2))
    assert math.isclose(r["value"], 4 / 3, abs_tol=1e-12)
    assert r["argmin"] == [0, 0, 1]
    assert abs(ie.orthogonality_defect_real(p3, [1, 0, -1], [1, -1, 1])) < 1e-12


def test_jacobi_matches_numpy():
    rng = np.random.default_rng(0)
    a = rng.standard_normal((7, 7))
    a = a + a.T
    vals, vecs = ie.jacobi_eigen(a)
    np.testing.assert_allclose(vals, np.linalg.eigvalsh(a), atol=1e-10)
    np.testing.assert_allclose(vecs @ np.diag(vals) @ vecs.T, a, atol=1e-10)
