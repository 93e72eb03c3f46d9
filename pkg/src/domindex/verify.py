"""Verification suites: computed ground truth versus the closed forms.

Every suite replays a batch of claims against exact engine values and
returns a :class:`CheckReport`. Claims come in two classes:

* proved claims: a discrepancy means an implementation bug (or a wrong
  published proof) and fails the run;
* contested/informational claims: the published statement is known to be
  shaky or self-contradictory, so disagreements are recorded as ledger
  entries instead of failures, together with every published variant.

Exhaustive suites walk all labeled graphs up to a small order; that is
feasible because the per-graph work is a handful of subset scans.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from typing import Iterator

from .engine import (
    DEFAULT_EXACT_CAP,
    dd_vector_oracle,
    domination_number,
    domination_profile,
    enumerate_minimal_dominating_sets,
    irredundance_numbers,
    is_dominating,
    upper_domination_number,
)
from .errors import EnumerationCapExceeded, UnknownSuite
from .families import (
    FamilySpec,
    format_family,
    generate,
    path_degree_variants,
    path_index_variants,
    predicted_degree,
    predicted_index,
    UNRESOLVED,
)
from .graph import Graph, VertexSet, delete_edge, is_connected, max_degree, new_graph, wiener_index
from .ops import (
    composition_complete_predicted,
    corona,
    corona_predicted,
    disjoint_union,
    join,
    join_predicted,
    product,
    union_predicted,
)

SUITE_NAMES = (
    "definitional",
    "inequalities",
    "families",
    "paths-resolution",
    "operations",
    "monotonicity",
    "products-ordering",
    "named-graphs",
)


@dataclass(frozen=True)
class Discrepancy:
    claim: str
    instance: str
    expected: object
    computed: object
    witness: object = None
    proved: bool = True


@dataclass
class CheckReport:
    suite: str
    instances: int
    passes: int
    discrepancies: list[Discrepancy]
    runtime_seconds: float
    details: dict = field(default_factory=dict)

    @property
    def proved_failures(self) -> list[Discrepancy]:
        return [d for d in self.discrepancies if d.proved]

    @property
    def ok(self) -> bool:
        return not self.proved_failures


@dataclass
class Limits:
    """Knobs for suite pool sizes; defaults reproduce the full runs."""

    max_n: int | None = None
    cap: int = DEFAULT_EXACT_CAP
    seed: int = 0
    quick: bool = False


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Seeded Erdos-Renyi style graph; the same seed always yields the
    same edge set."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {p} outside [0,1]")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return new_graph(n, edges)


def enumerate_labeled_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """All labeled graphs on n vertices (2^(n(n-1)/2) of them); n <= 7."""
    if n > 7:
        raise EnumerationCapExceeded(f"labeled enumeration capped at 7 vertices, got {n}")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
        g = new_graph(n, edges)
        if connected_only and n > 0 and not is_connected(g):
            continue
        yield g


def describe(g: Graph) -> str:
    return f"n={g.n};edges=" + ",".join(f"{u}-{v}" for u, v in g.edges())


def dd_vector(g: Graph, cap: int = DEFAULT_EXACT_CAP, gamma: int | None = None) -> list[int]:
    """Per-vertex domination degrees via the staged engine search."""
    from .engine import _dd_with_bound  # staged path with a shared lower bound

    if gamma is None:
        gamma = domination_number(g, cap)
    return [_dd_with_bound(g, v, gamma)[0] for v in range(g.n)]


class _Rec:
    def __init__(self, suite: str):
        self.suite = suite
        self.instances = 0
        self.passes = 0
        self.discrepancies: list[Discrepancy] = []
        self.details: dict = {}
        self._t0 = time.perf_counter()

    def record(self, claim, instance, ok, expected, computed, witness=None, proved=True):
        self.instances += 1
        if ok:
            self.passes += 1
        else:
            self.discrepancies.append(
                Discrepancy(claim, instance, expected, computed, witness, proved)
            )

    def finish(self) -> CheckReport:
        return CheckReport(
            suite=self.suite,
            instances=self.instances,
            passes=self.passes,
            discrepancies=self.discrepancies,
            runtime_seconds=time.perf_counter() - self._t0,
            details=self.details,
        )


def run_suite(suite: str, limits: Limits | None = None) -> CheckReport:
    limits = limits or Limits()
    try:
        fn = _SUITES[suite]
    except KeyError:
        raise UnknownSuite(f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)}") from None
    return fn(limits)


def _all_graphs(top: int) -> Iterator[Graph]:
    for n in range(1, top + 1):
        yield from enumerate_labeled_graphs(n)


def _suite_named_graphs(limits: Limits) -> CheckReport:
    rec = _Rec("named-graphs")
    # (claimed index, rigorously argued?): the petersen values come with
    # an argument and verify; the other two are bare remarks, so their
    # failures are recorded as contested rather than as build breakage.
    expected = {"petersen": (30, True), "herschel": (33, False), "grotzsch": (33, False)}
    for kind, (di, rigorous) in expected.items():
        g = generate(FamilySpec(kind)).graph
        prof = domination_profile(g, limits.cap)
        rec.record(
            "named-degree", kind,
            all(d == 3 for d in prof.degrees), "3 for every vertex",
            list(prof.degrees), proved=rigorous,
        )
        rec.record("named-index", kind, prof.index == di, di, prof.index, proved=rigorous)
        rec.record("named-gamma", kind, prof.gamma == 3, 3, prof.gamma)
        rec.record("named-drg", kind, prof.is_drg, True, prof.is_drg, proved=rigorous)
    return rec.finish()


def _suite_definitional(limits: Limits) -> CheckReport:
    rec = _Rec("definitional")
    top = limits.max_n if limits.max_n is not None else 6
    for g in _all_graphs(top):
        inst = describe(g)
        gamma = domination_number(g)
        upper = upper_domination_number(g)
        degs = dd_vector(g, gamma=gamma)
        rec.record(
            "degree-between-gamma-and-upper", inst,
            all(gamma <= d <= upper for d in degs),
            f"values in [{gamma},{upper}]", degs,
        )
        delta = max_degree(g)
        lo = -(-g.n // (1 + delta))
        rec.record(
            "gamma-degree-bounds", inst,
            lo <= gamma <= g.n - delta,
            f"gamma in [{lo},{g.n - delta}]", gamma,
        )
        if all(g.open_adj[v] for v in range(g.n)):
            bad = None
            for s in enumerate_minimal_dominating_sets(g):
                comp = VertexSet(g.n, g.full_mask & ~s.bits)
                if not is_dominating(g, comp):
                    bad = sorted(s.members())
                    break
            rec.record(
                "complement-of-minimal-ds-dominates", inst,
                bad is None, "complement dominates for every minimal ds", bad,
            )
    return rec.finish()


def _suite_inequalities(limits: Limits) -> CheckReport:
    rec = _Rec("inequalities")
    top = limits.max_n if limits.max_n is not None else 6
    for g in _all_graphs(top):
        inst = describe(g)
        gamma = domination_number(g)
        upper = upper_domination_number(g)
        degs = dd_vector(g, gamma=gamma)
        di = sum(degs)
        ir, upper_ir = irredundance_numbers(g)
        chain_ok = (
            ir <= gamma
            and g.n * gamma <= di <= g.n * upper
            and upper <= upper_ir
        )
        rec.record(
            "chain-ir-gamma-index-upper", inst, chain_ok,
            f"{ir} <= {gamma} <= DI/n <= {upper} <= {upper_ir}", di,
        )
        if g.n > 1 and is_connected(g):
            wi = wiener_index(g)
            rec.record(
                "degree-at-most-wiener", inst,
                all(d <= wi for d in degs), f"all <= {wi}", degs,
            )
            rec.record(
                "index-at-most-n-wiener", inst,
                di <= g.n * wi, f"<= {g.n * wi}", di,
            )
            rec.record(
                "degree-at-most-edge-count", inst,
                all(d <= g.m for d in degs), f"all <= {g.m}", degs,
                proved=False,
            )
    return rec.finish()


def _criterion_family_grid() -> list[FamilySpec]:
    specs = [FamilySpec("complete", (n,)) for n in range(1, 9)]
    specs += [FamilySpec("multipartite", t) for t in ((2, 2), (2, 3), (3, 3, 3))]
    specs += [FamilySpec("star", (n,)) for n in range(2, 9)]
    specs += [FamilySpec("cycle", (n,)) for n in range(3, 13)]
    specs += [FamilySpec("wheel", (n,)) for n in range(3, 11)]
    specs += [FamilySpec("book", (n,)) for n in range(2, 6)]
    specs += [FamilySpec("windmill", rs) for rs in ((2, 2), (3, 2), (3, 3), (4, 2))]
    specs += [FamilySpec("kragujevac", t) for t in ((1, 1), (2, 2), (2, 3), (1, 2, 3))]
    return specs


def _family_pool(limits: Limits) -> list[FamilySpec]:
    if limits.quick:
        return (
            [FamilySpec("complete", (n,)) for n in (1, 3)]
            + [FamilySpec("multipartite", (2, 2))]
            + [FamilySpec("star", (3,)), FamilySpec("cycle", (5,)), FamilySpec("wheel", (4,))]
            + [FamilySpec("book", (2,)), FamilySpec("book", (1,))]
            + [FamilySpec("windmill", (2, 2)), FamilySpec("kragujevac", (1, 1))]
            + [FamilySpec("path", (n,)) for n in (3, 4, 5)]
        )
    pool = _criterion_family_grid()
    pool.append(FamilySpec("book", (1,)))
    pool += [FamilySpec("path", (n,)) for n in range(3, 13)]
    pool += [FamilySpec(k) for k in ("petersen", "herschel", "grotzsch")]
    return pool


def _contested_degree_variants(spec: FamilySpec) -> dict[str, tuple[int, ...]]:
    if spec.kind == "path":
        return path_degree_variants(spec.params[0])
    if spec.kind == "book" and spec.params[0] == 1:
        return {"formula": (2, 2, 1, 1)}
    if spec.kind == "grotzsch":
        from .families import GROTZSCH_REMARK_DEGREES

        return {"remark": GROTZSCH_REMARK_DEGREES}
    return {}


def _contested_index_variants(spec: FamilySpec) -> dict[str, int]:
    if spec.kind == "path":
        return path_index_variants(spec.params[0])
    if spec.kind == "book" and spec.params[0] == 1:
        return {"formula": 2 * (1 + 2)}
    if spec.kind == "grotzsch":
        from .families import GROTZSCH_REMARK_INDEX

        return {"remark": GROTZSCH_REMARK_INDEX}
    return {}


def _suite_families(limits: Limits) -> CheckReport:
    rec = _Rec("families")
    resolved = {}
    for spec in _family_pool(limits):
        name = format_family(spec)
        g, roles = generate(spec)
        degs = dd_vector(g, limits.cap)
        di = sum(degs)
        preds = [predicted_degree(spec, v) for v in range(g.n)]
        firm = [(v, p) for v, p in enumerate(preds) if p is not UNRESOLVED]
        contested = [v for v, p in enumerate(preds) if p is UNRESOLVED]
        if firm:
            bad = [(g.labels[v], p, degs[v]) for v, p in firm if degs[v] != p]
            rec.record(
                "family-degree", name, not bad,
                "computed degree equals the closed form", bad or degs,
            )
        pred_di = predicted_index(spec)
        if pred_di is not UNRESOLVED:
            rec.record("family-index", name, di == pred_di, pred_di, di)
        if contested:
            oracle = dd_vector_oracle(g)
            rec.record(
                "family-contested-oracle", name,
                degs == oracle, oracle, degs,
            )
            variants = _contested_degree_variants(spec)
            matched = [k for k, pat in variants.items() if tuple(degs) == pat]
            resolved.setdefault(name, {})["dd"] = matched[0] if matched else None
            rec.record(
                "family-degree-contested", name,
                False, variants, tuple(degs),
                witness={"matched_variant": matched[0] if matched else None},
                proved=False,
            )
            ivariants = _contested_index_variants(spec)
            imatched = [k for k, val in ivariants.items() if di == val]
            resolved[name]["di"] = imatched[0] if imatched else None
            rec.record(
                "family-index-contested", name,
                False, ivariants, di,
                witness={"matched_variant": imatched[0] if imatched else None},
                proved=False,
            )
        if spec.kind in ("cycle", "kragujevac", "petersen", "herschel", "grotzsch"):
            rec.record(
                "family-drg", name,
                len(set(degs)) == 1, "all degrees equal", degs,
                proved=spec.kind != "grotzsch",
            )
        if spec.kind in ("star", "path", "kragujevac"):
            lo = -(-g.n // 3)
            leaf_ok = all(
                lo <= degs[v] <= g.n - 1 for v in range(g.n) if roles[v] == "leaf"
            )
            rec.record(
                "tree-leaf-degree-bounds", name, leaf_ok,
                f"leaf degrees in [{lo},{g.n - 1}]", degs,
            )
    rec.details["contested_resolutions"] = resolved
    return rec.finish()


def _suite_paths_resolution(limits: Limits) -> CheckReport:
    rec = _Rec("paths-resolution")
    top = limits.max_n if limits.max_n is not None else 15
    seen: dict[int, dict[str, set]] = {0: {"dd": set(), "di": set()},
                                       1: {"dd": set(), "di": set()},
                                       2: {"dd": set(), "di": set()}}
    rows = []
    for n in range(3, top + 1):
        spec = FamilySpec("path", (n,))
        g = generate(spec).graph
        name = f"path:{n}"
        degs = dd_vector(g)
        oracle = dd_vector_oracle(g)
        rec.record("path-oracle-agreement", name, degs == oracle, oracle, degs)
        di = sum(degs)
        dvars = path_degree_variants(n)
        dmatch = [k for k, pat in dvars.items() if tuple(degs) == pat]
        rec.record(
            "path-degree-variant-unique", name,
            len(dmatch) == 1, dvars, tuple(degs),
            witness={"matched": dmatch},
        )
        ivars = path_index_variants(n)
        imatch = [k for k, val in ivars.items() if di == val]
        rec.record(
            "path-index-variant-unique", name,
            len(imatch) == 1, ivars, di,
            witness={"matched": imatch},
        )
        k, t = divmod(n, 3)
        if t == 1:
            rec.record(
                "path-index-uncontested", name,
                di == (3 * k + 1) * (k + 1), (3 * k + 1) * (k + 1), di,
            )
        seen[t]["dd"].add(dmatch[0] if dmatch else None)
        seen[t]["di"].add(imatch[0] if imatch else None)
        rows.append({"n": n, "dd_variant": dmatch[0] if dmatch else None,
                     "di_variant": imatch[0] if imatch else None})
    table = {}
    for t, per_kind in seen.items():
        for key, names in per_kind.items():
            if not names:
                continue
            rec.record(
                "path-variant-consistent", f"residue {t} ({key})",
                len(names) == 1, "one variant per residue class", sorted(map(str, names)),
            )
            table.setdefault(str(t), {})[key] = sorted(map(str, names))[0] if len(names) == 1 else None
    rec.details["resolved_by_residue"] = table
    rec.details["resolved_rows"] = rows
    return rec.finish()


def _op_pool() -> list[tuple[str, Graph]]:
    specs = [
        ("K1", FamilySpec("complete", (1,))),
        ("K2", FamilySpec("complete", (2,))),
        ("K3", FamilySpec("complete", (3,))),
        ("P3", FamilySpec("path", (3,))),
        ("P4", FamilySpec("path", (4,))),
        ("C4", FamilySpec("cycle", (4,))),
        ("C5", FamilySpec("cycle", (5,))),
        ("K1,3", FamilySpec("star", (3,))),
    ]
    return [(name, generate(s).graph) for name, s in specs]


def _suite_operations(limits: Limits) -> CheckReport:
    rec = _Rec("operations")
    pool = _op_pool()
    base = {name: dd_vector(g) for name, g in pool}
    for na, ga in pool:
        for nb, gb in pool:
            comp = disjoint_union([ga, gb])
            got = dd_vector(comp, limits.cap)
            want = union_predicted([base[na], base[nb]])
            rec.record(
                "union-degree-formula", f"union({na},{nb})",
                got == want, want, got,
            )
            jg = join(ga, gb)
            jgot = dd_vector(jg, limits.cap)
            jwant = join_predicted(base[na], base[nb])
            rec.record(
                "join-degree-formula", f"join({na},{nb})",
                jgot == jwant, jwant, jgot, proved=False,
            )
            if ga.n * (1 + gb.n) <= limits.cap:
                cg = corona(ga, gb)
                cgot = dd_vector(cg, limits.cap)
                cwant = corona_predicted(ga.n, base[nb])
                rec.record(
                    "corona-degree-formula", f"corona({na},{nb})",
                    cgot == cwant, cwant, cgot,
                )
        for m in (2, 3):
            km = generate(FamilySpec("complete", (m,))).graph
            pg = product(ga, km, "composition")
            if pg.n > limits.cap:
                continue
            pgot = dd_vector(pg, limits.cap)
            pwant = composition_complete_predicted(base[na], m)
            rec.record(
                "composition-degree-formula", f"composition({na},K{m})",
                pgot == pwant, pwant, pgot,
            )
    return rec.finish()


def _suite_monotonicity(limits: Limits) -> CheckReport:
    rec = _Rec("monotonicity")
    top = limits.max_n if limits.max_n is not None else 6
    counts = {"edge-deletion-degree-monotone": [0, 0, None],
              "edge-deletion-index-monotone": [0, 0, None]}
    for n in range(1, top + 1):
        for g in enumerate_labeled_graphs(n, connected_only=True):
            base = dd_vector(g)
            for u, v in g.edges():
                h = delete_edge(g, u, v)
                degs = dd_vector(h)
                inst = f"{describe(g)};drop={u}-{v}"
                checks = (
                    ("edge-deletion-degree-monotone",
                     all(base[i] <= degs[i] for i in range(n)), base, degs),
                    ("edge-deletion-index-monotone",
                     sum(base) <= sum(degs), sum(base), sum(degs)),
                )
                for claim, ok, want, got in checks:
                    rec.record(claim, inst, ok, want, got, proved=False)
                    row = counts[claim]
                    row[0] += 1
                    if not ok:
                        row[1] += 1
                        if row[2] is None:
                            row[2] = inst
    rec.details["empirical_verdicts"] = {
        claim: {
            "instances": row[0],
            "violations": row[1],
            "holds": row[1] == 0,
            "first_counterexample": row[2],
        }
        for claim, row in counts.items()
    }
    return rec.finish()


def _suite_products_ordering(limits: Limits) -> CheckReport:
    rec = _Rec("products-ordering")
    pool = _op_pool()
    for na, ga in pool:
        for nb, gb in pool:
            if ga.n * gb.n > 16:
                continue
            di = {
                kind: sum(dd_vector(product(ga, gb, kind), limits.cap))
                for kind in ("cartesian", "direct", "strong", "composition")
            }
            inst = f"{na} x {nb}"
            ok = di["composition"] <= di["strong"] <= min(di["cartesian"], di["direct"])
            rec.record(
                "product-index-ordering", inst, ok,
                "composition <= strong <= min(cartesian, direct)", di, proved=False,
            )
    return rec.finish()


_SUITES = {
    "definitional": _suite_definitional,
    "inequalities": _suite_inequalities,
    "families": _suite_families,
    "paths-resolution": _suite_paths_resolution,
    "operations": _suite_operations,
    "monotonicity": _suite_monotonicity,
    "products-ordering": _suite_products_ordering,
    "named-graphs": _suite_named_graphs,
}


def write_ledger(report: CheckReport, path: str) -> None:
    """One JSON record per discrepancy, line-delimited."""
    with open(path, "w", encoding="utf-8") as fh:
        for d in report.discrepancies:
            fh.write(
                json.dumps(
                    {
                        "suite": report.suite,
                        "claim": d.claim,
                        "proved": d.proved,
                        "instance": d.instance,
                        "expected": _jsonable(d.expected),
                        "computed": _jsonable(d.computed),
                        "witness": _jsonable(d.witness),
                    },
                    sort_keys=True,
                )
                + "\n"
            )


def _jsonable(x):
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    return repr(x)


def report_to_text(report: CheckReport) -> str:
    lines = [
        f"suite: {report.suite}",
        f"instances: {report.instances}",
        f"passes: {report.passes}",
        f"discrepancies: {len(report.discrepancies)}"
        f" (proved: {len(report.proved_failures)})",
        f"runtime: {report.runtime_seconds:.2f}s",
    ]
    for d in report.discrepancies:
        tag = "PROVED" if d.proved else "info"
        lines.append(f"  [{tag}] {d.claim} @ {d.instance}")
        lines.append(f"      expected {d.expected!r} got {d.computed!r}")
    for key, val in report.details.items():
        lines.append(f"{key}: {json.dumps(_jsonable(val), sort_keys=True)}")
    return "".join(line + "\n" for line in lines)


def report_to_json(report: CheckReport) -> str:
    payload = {
        "suite": report.suite,
        "instances": report.instances,
        "passes": report.passes,
        "proved_failures": len(report.proved_failures),
        "discrepancies": [
            {
                "claim": d.claim,
                "proved": d.proved,
                "instance": d.instance,
                "expected": _jsonable(d.expected),
                "computed": _jsonable(d.computed),
                "witness": _jsonable(d.witness),
            }
            for d in report.discrepancies
        ],
        "runtime_seconds": round(report.runtime_seconds, 3),
        "details": _jsonable(report.details),
    }
    return json.dumps(payload, indent=2) + "\n"
