import re
from dataclasses import replace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grundyb.coloring import Coloring, is_b_valid
from grundyb.errors import CertificateCheckFailed, NoWitnessFound, PreconditionViolated
from grundyb.families import (
    Lcg, atom_coloring, atom_tree, gt, gt_grundy_coloring, planted_cactus, random_cactus,
    random_girth_graph,
)
from grundyb.graph import build_graph
from grundyb.grundy import first_fit, grundy_number
from grundyb.recolor import (
    cactus_target, check_certificate, find_b3_witness, recolor_cactus, recolor_girth6, recolor_k4e,
)

LINE = re.compile(r"^[A-Z]+ [a-z0-9-]+ \d+ (\d+|-)→(\d+|-)$")


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def assert_sound(G, cert):
    check_certificate(G, cert)
    assert is_b_valid(cert.subgraph(G), cert.new_coloring)


def test_target():
    assert [cactus_target(k) for k in (6, 7, 8, 10, 16, 20)] == [2, 3, 2, 4, 8, 12]


@pytest.mark.parametrize("t", range(2, 6))
def test_k4e_on_gt(t):
    G = gt(t)
    cert = recolor_k4e(G, gt_grundy_coloring(t))
    assert_sound(G, cert)
    assert cert.p == t - 1


def test_k4e_on_high_girth_graphs():
    checked = 0
    for seed in range(30):
        G = random_girth_graph(16, seed, 5)
        k, order = grundy_number(G)
        cert = recolor_k4e(G, first_fit(G, order))
        assert_sound(G, cert)
        assert cert.p >= k // 2
        checked += 1
    assert checked == 30


@pytest.mark.parametrize("k", range(2, 10))
def test_girth6_on_atoms(k):
    T = atom_tree(k)
    cert = recolor_girth6(T, atom_coloring(k))
    assert_sound(T, cert)
    assert cert.p == 2 * k // 3


def test_girth6_on_random_girth_graphs():
    for seed in range(30):
        G = random_girth_graph(18, seed, 6)
        k, order = grundy_number(G)
        cert = recolor_girth6(G, first_fit(G, order))
        assert_sound(G, cert)
        assert cert.p == 2 * k // 3


def test_preconditions():
    with pytest.raises(PreconditionViolated):
        recolor_k4e(cycle(4), Coloring((1, 2, 1, 2)))
    with pytest.raises(PreconditionViolated):
        recolor_girth6(cycle(5), Coloring((1, 2, 1, 2, 3)))
    K4 = build_graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    with pytest.raises(PreconditionViolated):
        recolor_cactus(K4, Coloring((1, 2, 3, 4)))
    with pytest.raises(PreconditionViolated):
        recolor_girth6(path(4), Coloring((2, 1, 2, 3)))


def test_b3_witness_kinds():
    verts, C = find_b3_witness(build_graph(4, [(0, 1), (1, 2), (2, 0), (2, 3)]))
    assert verts == (0, 1, 2) and C.colors == (1, 2, 3)
    verts, C = find_b3_witness(path(6))
    assert verts == (0, 1, 2, 3, 4) and C.colors == (1, 2, 3, 1, 2)
    verts, C = find_b3_witness(cycle(5))
    assert len(verts) == 5 and is_b_valid(cycle(5), C)
    for G in (cycle(4), build_graph(5, [(0, i) for i in range(1, 5)]), path(4)):
        with pytest.raises(NoWitnessFound):
            find_b3_witness(G)


def test_b3_witness_is_induced():
    for seed in range(30):
        G = random_cactus(14, seed, 40)
        try:
            verts, C = find_b3_witness(G)
        except NoWitnessFound:
            continue
        H = build_graph(len(verts), [])
        from grundyb.graph import induced_subgraph
        H, _ = induced_subgraph(G, verts)
        assert is_b_valid(H, C) and C.k == 3


def test_cactus_small_k_branches():
    T = atom_tree(6)
    cert = recolor_cactus(T, atom_coloring(6))
    assert cert.p == 2 and len(cert.kept) == 2
    cert = recolor_cactus(build_graph(1, []), Coloring((1,)))
    assert cert.p == 1 and cert.kept == (0,)
    for k in (7, 8, 9):
        cert = recolor_cactus(atom_tree(k), atom_coloring(k))
        assert_sound(atom_tree(k), cert)
        assert cert.p == 3


@pytest.mark.parametrize("k", range(10, 14))
def test_cactus_pipeline_on_atoms(k):
    T = atom_tree(k)
    cert = recolor_cactus(T, atom_coloring(k))
    assert_sound(T, cert)
    assert cert.p >= cactus_target(k)


@settings(max_examples=80, deadline=None)
@given(st.integers(10, 15), st.integers(0, 10 ** 6), st.sampled_from([0, 35, 70]))
def test_cactus_pipeline_on_planted(k, seed, gadgets):
    G, C = planted_cactus(k, seed, gadget_percent=gadgets)
    cert = recolor_cactus(G, C)
    assert_sound(G, cert)
    assert cert.p >= cactus_target(k)


def test_cactus_on_first_fit_colorings():
    rng = Lcg(5)
    for seed in range(40):
        G = random_cactus(40, seed, 60)
        order = list(range(G.n))
        for i in range(G.n - 1, 0, -1):
            j = rng.below(i + 1)
            order[i], order[j] = order[j], order[i]
        C = first_fit(G, order)
        cert = recolor_cactus(G, C)
        assert_sound(G, cert)
        assert cert.p >= cactus_target(C.k)


def test_trace_is_deterministic_and_well_formed():
    G, C = planted_cactus(12, 4)
    a, b = recolor_cactus(G, C), recolor_cactus(G, C)
    assert a == b and a.trace_text() == b.trace_text()
    lines = a.trace_text().splitlines()
    assert lines and all(LINE.match(x) or x.startswith(("REDUCE", "ASSEMBLE")) for x in lines)


def test_tampered_certificate_is_rejected():
    T = atom_tree(6)
    cert = recolor_girth6(T, atom_coloring(6))
    bad = replace(cert, dominating=tuple(reversed(cert.dominating)))
    with pytest.raises(CertificateCheckFailed, match=r"^\[verify\]"):
        check_certificate(T, bad)
    colors = list(cert.new_coloring.colors)
    u = next(i for i, v in enumerate(cert.kept) for w in T.adj[v] if w in cert.kept)
    w = next(cert.kept.index(x) for x in T.adj[cert.kept[u]] if x in cert.kept)
    colors[w] = colors[u]
    try:
        bad = replace(cert, new_coloring=Coloring(tuple(colors)))
    except ValueError:
        return
    with pytest.raises(CertificateCheckFailed) as info:
        check_certificate(T, bad, stage="probe")
    assert info.value.stage == "probe" and info.value.trace == cert.trace
