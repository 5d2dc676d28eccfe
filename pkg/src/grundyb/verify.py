"""Named verification suites with deterministic, line-oriented reports."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .bchromatic import b_number, b_of_tree, is_b_monotone, m_of
from .coloring import Coloring, is_b_valid, is_grundy_valid
from .errors import UnknownSuite
from .families import (
    Lcg, atom_coloring, atom_metrics, atom_tree, cactus_chain, fig2_cactus, FIG2_CENTER,
    floor_log2, gmn, gmn_grundy_coloring, gmn_nonmonotone_witness, gt, gt_grundy_coloring,
    planted_cactus, random_graph, random_tree,
)
from .graph import degree_sequence, induced_subgraph, is_cactus
from .grundy import first_fit, grundy_at_least, grundy_number, sibling_violations, witness_decomposition
from .recolor import cactus_target, check_certificate, recolor_cactus, recolor_girth6, recolor_k4e


@dataclass(frozen=True)
class Case:
    label: str
    expected: str
    computed: str
    ok: bool


@dataclass
class VerificationReport:
    suite: str
    params: dict
    cases: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return bool(self.cases) and all(c.ok for c in self.cases)

    def failures(self) -> list:
        return [c for c in self.cases if not c.ok]

    def to_text(self) -> str:
        """Report body; wall time is left out so reruns compare equal byte for byte."""
        head = " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        lines = [f"suite {self.suite} {head}".rstrip()]
        for c in self.cases:
            mark = "ok  " if c.ok else "FAIL"
            lines.append(f"  {mark} {c.label}: expected {c.expected}, computed {c.computed}")
        lines.append(f"{'PASS' if self.passed else 'FAIL'} {self.suite} "
                     f"({len(self.cases) - len(self.failures())}/{len(self.cases)} cases)")
        return "\n".join(lines) + "\n"


def _case(label, expected, computed, ok=None):
    if ok is None:
        ok = expected == computed
    return Case(label, str(expected), str(computed), bool(ok))


def _sub_seed(seed, i):
    return seed * 100003 + i


def _ff_order(C: Coloring):
    return sorted(range(len(C)), key=lambda v: (C[v], v))


# suites ------------------------------------------------------------------


def _prop1(P, limit):
    for m in range(2, P["mmax"] + 1):
        for n in range(1, P["nmax"] + 1):
            G = gmn(m, n)
            C = gmn_grundy_coloring(m, n)
            replay = first_fit(G, _ff_order(C)).k
            yield _case(f"G({m},{n}) first-fit replay", f">= {m + n - 1}", replay, replay >= m + n - 1)
            found, _ = grundy_at_least(G, m + n - 1, limit)
            yield _case(f"G({m},{n}) gamma >= {m + n - 1}", True, found)
            yield _case(f"G({m},{n}) b", m, b_number(G, limit)[0])


def _prop2(P, limit):
    n = P["n"]
    for m in range(2, P["mmax"] + 1):
        G = gmn(m, n)
        kept, colors = gmn_nonmonotone_witness(m, n)
        H, index = induced_subgraph(G, kept)
        C = Coloring(tuple(colors[v] for v in kept))
        yield _case(f"G({m},{n}) witness b-valid with {m + 1} colors", (True, m + 1),
                    (bool(is_b_valid(H, C)), C.k))
        yield _case(f"G({m},{n}) b-monotone", False, bool(is_b_monotone(G, max(limit or 0, G.n))))


def _prop4(P, limit):
    for k in range(2, P["kmax"] + 1):
        T = atom_tree(k)
        A = atom_metrics(k)
        yield _case(f"T_{k} m", A.m_predicted, m_of(T))
        yield _case(f"T_{k} degree sequence closed form", True, degree_sequence(T) == A.degrees())


def _prop5(P, limit):
    for k in range(2, P["kmax"] + 1):
        lo = k - floor_log2(k - 1)
        hi = k - floor_log2(k) + 1
        b, C = b_of_tree(atom_tree(k), limit)
        ok = lo <= b <= hi and bool(is_b_valid(atom_tree(k), C))
        yield _case(f"T_{k} b in [{lo},{hi}]", f"[{lo},{hi}]", b, ok)


def _cor1(P, limit):
    rng = Lcg(P["seed"])
    for i in range(P["trials"]):
        n = 2 + rng.below(P["nmax"] - 1)
        T = random_tree(n, _sub_seed(P["seed"], i))
        g, _ = grundy_number(T, limit)
        b, _ = b_of_tree(T, limit)
        lo = g - floor_log2(g - 1)
        yield _case(f"tree #{i} n={n} gamma={g}", f">= {lo}", b, b >= lo)


def _lemma1(P, limit):
    for k in range(2, P["kmax"] + 1):
        T = atom_tree(k)
        bad = sibling_violations(T, witness_decomposition(T, atom_coloring(k)))
        yield _case(f"T_{k} sibling property", [], bad)
    rng = Lcg(P["seed"])
    for i in range(P["trials"]):
        k = 4 + rng.below(P["kmax"] - 3)
        G, C = planted_cactus(k, _sub_seed(P["seed"], i))
        bad = sibling_violations(G, witness_decomposition(G, C))
        yield _case(f"planted cactus #{i} k={k} sibling property", [], bad)


def _certify(label, G, C, recolor, want, exact):
    cert = recolor(G, C)
    check_certificate(G, cert)
    ok = cert.p == want if exact else cert.p >= want
    return _case(label, f"{'' if exact else '>= '}{want}", cert.p, ok)


def _thm_cactus(P, limit):
    for k in P["atoms"]:
        yield _certify(f"T_{k} (k={k})", atom_tree(k), atom_coloring(k), recolor_cactus, cactus_target(k), False)
    rng = Lcg(P["seed"])
    for i in range(P["trials"]):
        k = P["kmin"] + rng.below(P["kmax"] - P["kmin"] + 1)
        G, C = planted_cactus(k, _sub_seed(P["seed"], i))
        yield _certify(f"planted cactus #{i} n={G.n} k={k}", G, C, recolor_cactus, cactus_target(k), False)


def _thm_k4e(P, limit):
    for t in range(2, P["tmax"] + 1):
        G, C = gt(t), gt_grundy_coloring(t)
        yield _certify(f"G_{t} k={C.k}", G, C, recolor_k4e, C.k // 2, True)


def _thm_girth6(P, limit):
    for k in P["atoms"]:
        yield _certify(f"T_{k}", atom_tree(k), atom_coloring(k), recolor_girth6, 2 * k // 3, True)
    found = i = 0
    rng = Lcg(P["seed"])
    while found < P["trials"]:
        n = 16 + rng.below(P["nmax"] - 15)
        T = random_tree(n, _sub_seed(P["seed"], i))
        i += 1
        g, order = grundy_number(T, limit)
        if not P["gmin"] <= g <= P["gmax"]:
            continue
        found += 1
        C = first_fit(T, order)
        yield _certify(f"tree #{i - 1} n={n} gamma={g}", T, C, recolor_girth6, 2 * g // 3, True)


def _gt_sharp(P, limit):
    for t in range(2, P["tmax"] + 1):
        G = gt(t)
        C = gt_grundy_coloring(t)
        if G.n <= P["exact_n"]:
            g = grundy_number(G, limit)[0]
        else:
            # explicit Grundy coloring gives the lower bound, max degree + 1 the upper
            g = C.k if is_grundy_valid(G, C) and C.k == G.max_degree() + 1 else None
        yield _case(f"G_{t} gamma", 2 * t - 1, g)
        b = b_number(G, limit)[0]
        yield _case(f"G_{t} b", t, b)
        cert = recolor_k4e(G, C)
        yield _case(f"G_{t} b = floor(gamma/2) + 1", b, cert.p + 1)


def _chain_sharp(P, limit):
    for k, t in ((4, 5), (4, 6)):
        G = cactus_chain(k, t)
        yield _case(f"chain({k},{t}) cactus", True, is_cactus(G))
        yield _case(f"chain({k},{t}) b", t, b_number(G, limit)[0])
        yield _case(f"chain({k},{t}) gamma", k, grundy_number(G, limit)[0])


def _gamma_2m(P, limit):
    rng = Lcg(P["seed"])
    for i in range(P["trials"]):
        percent = 10 + rng.below(81)
        G = random_graph(P["n"], _sub_seed(P["seed"], i), percent)
        g = grundy_number(G, limit)[0]
        m = m_of(G)
        yield _case(f"graph #{i} p={percent}% gamma={g}", f"<= {2 * m}", g, g <= 2 * m)


def _fig2(P, limit):
    G = fig2_cactus()
    rest = [v for v in range(G.n) if v != FIG2_CENTER]
    yield _case("cactus", True, is_cactus(G))
    yield _case("b(G)", 3, b_number(G, limit)[0])
    yield _case("b(G - v)", 4, b_number(induced_subgraph(G, rest)[0], limit)[0])
    yield _case("b-monotone", False, bool(is_b_monotone(G)))


SUITES = {
    "prop1": (_prop1, {"mmax": 4, "nmax": 3}),
    "prop2": (_prop2, {"mmax": 4, "n": 3}),
    "prop4": (_prop4, {"kmax": 14}),
    "prop5": (_prop5, {"kmax": 7}),
    "cor1": (_cor1, {"trials": 100, "nmax": 14, "seed": 0}),
    "lemma1": (_lemma1, {"kmax": 10, "trials": 30, "seed": 0}),
    "thm-cactus": (_thm_cactus, {"atoms": (6, 8, 10), "trials": 50, "kmin": 7, "kmax": 10, "seed": 0}),
    "thm-k4e": (_thm_k4e, {"tmax": 4}),
    "thm-girth6": (_thm_girth6, {"atoms": (4, 5, 6), "trials": 30, "nmax": 32, "gmin": 4, "gmax": 6, "seed": 0}),
    "gt-sharp": (_gt_sharp, {"tmax": 4, "exact_n": 9}),
    "chain-sharp": (_chain_sharp, {}),
    "gamma-2m": (_gamma_2m, {"n": 10, "trials": 200, "seed": 0}),
    "fig2": (_fig2, {}),
}


def suite_defaults(suite: str) -> dict:
    if suite not in SUITES:
        raise UnknownSuite(suite)
    return dict(SUITES[suite][1])


def run_verification(suite: str, params: dict | None = None, limit: int | None = None) -> VerificationReport:
    """Run a named suite; ``params`` override its defaults."""
    if suite not in SUITES:
        raise UnknownSuite(suite)
    fn, defaults = SUITES[suite]
    P = dict(defaults)
    for key, value in (params or {}).items():
        if key not in P:
            raise UnknownSuite(f"{suite} has no parameter {key!r}")
        P[key] = value
    start = time.perf_counter()
    cases = list(fn(P, limit))
    return VerificationReport(suite, P, cases, time.perf_counter() - start)
