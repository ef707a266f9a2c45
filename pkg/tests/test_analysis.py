from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bhcut import analysis, topology


def test_no_faults_single_component(bh2):
    report = analysis.components(bh2, [])
    assert report.connected
    assert report.components[0].size == 16
    assert report.components[0].min_degree == 4


def test_partner_pair_isolated_by_shared_neighborhood(bh2):
    # deleting N((0,0)) also cuts off the partner (2,0); the two are not
    # adjacent (both have even inner index), so each ends up a singleton
    faults = [bh2.index(v) for v in topology.neighbors_direct((0, 0), 2)]
    report = analysis.components(bh2, faults)
    assert not report.connected
    comps = {c.vertices for c in report.components}
    assert (bh2.index((0, 0)),) in comps
    assert (bh2.index((2, 0)),) in comps


def test_component_sizes_sum(bh3):
    faults = list(range(10))
    report = analysis.components(bh3, faults)
    assert sum(c.size for c in report.components) == 64 - 10


def test_deleting_everything_rejected(bh1):
    with pytest.raises(analysis.EmptyGraphError):
        analysis.components(bh1, [0, 1, 2, 3])


def test_restricted_cut_on_connected_graph_is_false(bh2):
    for h in range(4):
        assert not analysis.is_restricted_h_cut(bh2, [], h).is_cut


def test_restricted_h_range_checked(bh2):
    with pytest.raises(ValueError):
        analysis.is_restricted_h_cut(bh2, [], 4)
    with pytest.raises(ValueError):
        analysis.is_restricted_h_cut(bh2, [], -1)


def test_four_vertex_1extra_cut_exists(bh2):
    # 4n-4 = 4 at n=2; note N({(0,0),(2,0)}) is NOT such a cut, since the
    # partners it strands are nonadjacent and become singletons
    faults = [bh2.index(v) for v in topology.neighbors_direct((0, 0), 2)]
    assert len(faults) == 4
    assert not analysis.is_g_extra_cut(bh2, faults, 1).is_cut
    witnesses = [
        f for f in combinations(range(16), 4)
        if analysis.is_g_extra_cut(bh2, f, 1).is_cut
    ]
    assert witnesses  # some size-4 fault set is a 1-extra cut


def test_no_three_vertex_1extra_cut(bh2):
    # exhaustive over all C(16,3) = 560 fault sets
    count = 0
    for f in combinations(range(16), 3):
        count += 1
        assert not analysis.is_g_extra_cut(bh2, f, 1).is_cut
    assert count == 560


def test_failing_component_reported(bh2):
    # isolating (0,0)/(2,0) fails restricted-1: the pair has degree 1
    faults = [bh2.index(v) for v in topology.neighbors_direct((0, 0), 2)]
    verdict = analysis.is_restricted_h_cut(bh2, faults, 2)
    assert not verdict.is_cut
    assert verdict.failing_component is not None
    assert verdict.failing_component.min_degree < 2


def test_partner_closure_check(bh2):
    assert analysis.partner_closure_check(
        bh2, [bh2.index((0, 0)), bh2.index((2, 0))]
    )
    assert not analysis.partner_closure_check(
        bh2, [bh2.index((0, 0)), bh2.index((1, 0))]
    )


def test_minimum_1extra_cut_components_partner_closed(bh2):
    # every minimum (size-4) 1-extra cut leaves only partner-closed,
    # even-order components
    found = 0
    for f in combinations(range(16), 4):
        if analysis.is_g_extra_cut(bh2, f, 1).is_cut:
            found += 1
            for c in analysis.components(bh2, f).components:
                assert c.size % 2 == 0
                assert analysis.partner_closure_check(bh2, c.vertices)
    assert found > 0


@settings(max_examples=200, deadline=None)
@given(st.sets(st.integers(min_value=0, max_value=15), max_size=12))
def test_restricted_h_monotone_in_h(faults):
    g = topology.build_direct(2)
    cut_at = [analysis.is_restricted_h_cut(g, faults, h).is_cut for h in range(4)]
    # a restricted-h cut is also a restricted-h' cut for every h' <= h
    for h in range(1, 4):
        if cut_at[h]:
            assert all(cut_at[:h])


@settings(max_examples=200, deadline=None)
@given(st.sets(st.integers(min_value=0, max_value=15), max_size=12))
def test_bottom_equivalences(faults):
    g = topology.build_direct(2)
    plain = analysis.is_restricted_h_cut(g, faults, 0).is_cut
    assert plain == analysis.is_g_extra_cut(g, faults, 0).is_cut
    assert (
        analysis.is_restricted_h_cut(g, faults, 1).is_cut
        == analysis.is_g_extra_cut(g, faults, 1).is_cut
    )


def test_report_json_stable(bh2):
    report = analysis.components(bh2, [0, 1])
    payload = report.to_json()
    assert list(payload) == ["connected", "fault_size", "components"]
    assert payload["fault_size"] == 2
    verdict = analysis.is_restricted_h_cut(bh2, [0, 1], 1)
    assert list(verdict.to_json()) == ["is_cut", "kind", "param"]
