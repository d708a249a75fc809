"""Graph-level analysis and the fixed verification suite.

``analyze_graph`` produces the JSON-ready report: girth, simplicity of
B(G), the double-circuit census, and a verdict per claimed property
(failures carry a witness edge set that can be fed back through
``--check-set``).  ``verify_claims`` runs the fixed suite over the built-in
corpus, and ``search_sweep`` probes seeded random graphs for positive
double circuits.
"""

import json
import math
import random
import time
from itertools import combinations_with_replacement
from pathlib import Path

from .bicircular import BicircularMatroid
from .bitset import bits, set_of
from .double_circuit import (
    DoubleCircuitCensus,
    Progress,
    enumerate_oracle,
    enumerate_structural,
    max_degree,
)
from .generators import (
    banana,
    bouquet,
    complete,
    cycle,
    disjoint_union,
    handcuff,
    petersen,
    random_multigraph,
    random_with_min_girth,
    theta,
)
from .generators import dodecahedron as dodecahedron_graph
from .matroid import Matroid, from_bicircular, from_rank_table
from .multigraph import Multigraph

SCHEMA_VERSION = 1

ORACLE_LIMIT = 20
DUALITY_LIMIT = 10


def census_for(
    graph: Multigraph, enumerator: str = "auto", progress: Progress = None
) -> DoubleCircuitCensus:
    """Run the requested enumerator; auto picks the definitional scan when
    the subset space is small enough and the growth search otherwise."""
    ctx = BicircularMatroid(graph)
    if enumerator == "auto":
        enumerator = "oracle" if graph.edge_count <= ORACLE_LIMIT else "structural"
    if enumerator == "oracle":
        return enumerate_oracle(ctx, progress=progress)
    if enumerator == "structural":
        return enumerate_structural(ctx, progress=progress)
    raise ValueError(f"unknown enumerator {enumerator!r} (oracle|structural|auto)")


# -- duality ------------------------------------------------------------------


def _faulty_dual(matroid: Matroid) -> Matroid:
    """Dual with singleton ranks forced to 0 — a deliberately broken oracle
    used to demonstrate that the duality check detects bad rank functions."""
    dual = matroid.dual()
    true_rank = dual.rank_mask

    def rank_fn(mask: int) -> int:
        if mask.bit_count() == 1:
            return 0
        return true_rank(mask)

    return Matroid(dual.size, rank_fn, tag=f"{dual.tag}#fault")


def duality_exhaustive(graph: Multigraph, inject_fault: bool = False) -> dict:
    """Check, for every L ⊆ E: L is a coline of the dual iff E - L is a
    double circuit of B(G), and the two partitions coincide."""
    m = graph.edge_count
    ctx = BicircularMatroid(graph)
    table = ctx.rank_table(limit=DUALITY_LIMIT)
    matroid = from_rank_table(m, table, tag=f"bicircular({graph.name or 'graph'})")
    dual = _faulty_dual(matroid) if inject_fault else matroid.dual()
    ground = matroid.ground_mask
    pairs = 0
    for lmask in range(1 << m):
        dmask = ground ^ lmask
        coline = dual.is_coline_mask(lmask)
        double = matroid.is_double_circuit_mask(dmask)
        if coline != double:
            return {
                "status": "fail",
                "witness": {
                    "graph": graph.name,
                    "flat": sorted(set_of(lmask)),
                    "complement": sorted(set_of(dmask)),
                    "coline_of_dual": coline,
                    "double_circuit": double,
                },
            }
        if coline:
            pairs += 1
            copoints = dual.copoint_partition_mask(lmask).classes
            circuits = matroid.circuit_partition_mask(dmask).classes
            if copoints != circuits:
                return {
                    "status": "fail",
                    "witness": {
                        "graph": graph.name,
                        "flat": sorted(set_of(lmask)),
                        "copoint_classes": [sorted(c) for c in copoints],
                        "circuit_classes": [sorted(c) for c in circuits],
                    },
                }
    return {"status": "pass", "subsets_checked": 1 << m, "matching_pairs": pairs}


# -- per-graph report -----------------------------------------------------------


def _census_verdicts(graph: Multigraph, census: DoubleCircuitCensus, girth_value):
    verdicts: dict[str, dict] = {}
    witnesses: list[dict] = []

    def witness_for(report, verdict, **extra):
        payload = {"verdict": verdict, **report.to_json(), **extra}
        witnesses.append(payload)

    if girth_value >= 5:
        bad = [r for r in census.reports if r.positive]
        verdicts["girth5_implies_no_positive"] = {
            "status": "fail" if bad else "pass"
        }
        for r in bad:
            witness_for(r, "girth5_implies_no_positive")
    else:
        verdicts["girth5_implies_no_positive"] = {
            "status": "not-applicable",
            "reason": f"girth {girth_value} < 5",
        }

    over = [r for r in census.reports if r.degree > 6]
    verdicts["degree_bound_6"] = {
        "status": "fail" if over else "pass",
        "max_degree": max_degree(census),
    }
    for r in over:
        witness_for(r, "degree_bound_6")

    structure_bad = []
    for r in census.reports:
        problems = []
        if graph.has_leaves(r.edges):
            problems.append("leaf vertex")
        if len(r.distinguished_vertices) > 4:
            problems.append("more than 4 branch vertices")
        if not r.subdivision_containment:
            problems.append("subdivision class split across partition blocks")
        if problems:
            structure_bad.append((r, problems))
    verdicts["circuit_shape"] = {"status": "fail" if structure_bad else "pass"}
    for r, problems in structure_bad:
        witness_for(r, "circuit_shape", problems=problems)

    return verdicts, witnesses


def evaluate_check_set(graph: Multigraph, subset, girth_value) -> dict:
    """Re-examine one edge set: is it a double circuit, is it positive, and
    does it violate any applicable verdict?  Used to re-verify witnesses."""
    from .double_circuit import analyze as analyze_double_circuit

    ctx = BicircularMatroid(graph)
    mask = graph.edge_mask(subset)
    out: dict = {"edges": sorted(set_of(mask))}
    r = ctx.rank_mask(mask)
    nullity = mask.bit_count() - r
    is_dc = nullity == 2 and all(
        ctx.rank_mask(mask ^ (1 << d)) == r for d in bits(mask)
    )
    out["rank"] = r
    out["nullity"] = nullity
    out["is_double_circuit"] = is_dc
    out["fails"] = False
    if is_dc:
        report = analyze_double_circuit(ctx, set_of(mask))
        out.update(report.to_json())
        violations = []
        if girth_value >= 5 and report.positive:
            violations.append("girth5_implies_no_positive")
        if report.degree > 6:
            violations.append("degree_bound_6")
        if (
            graph.has_leaves(report.edges)
            or len(report.distinguished_vertices) > 4
            or not report.subdivision_containment
        ):
            violations.append("circuit_shape")
        out["violates"] = violations
        out["fails"] = bool(violations)
    return out


def apply_fixture(path: str | Path, census: DoubleCircuitCensus) -> dict:
    """Record census counts on first sight, compare on every later run."""
    path = Path(path)
    key = f"{census.graph_label}|{census.enumerator}"
    entry = {
        "total": census.total,
        "positive_count": census.positive_count,
        "degree_histogram": {str(k): v for k, v in sorted(census.degree_histogram.items())},
    }
    data = json.loads(path.read_text()) if path.exists() else {}
    if key in data:
        if data[key] == entry:
            return {"status": "matched", "key": key}
        return {"status": "mismatch", "key": key, "frozen": data[key], "observed": entry}
    data[key] = entry
    path.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
    return {"status": "recorded", "key": key}


def analyze_graph(
    graph: Multigraph,
    enumerator: str = "auto",
    *,
    source: str = "",
    check_set=None,
    fixture: str | Path | None = None,
    progress: Progress = None,
) -> dict:
    """The full per-graph report; exit status is derivable from it."""
    start = time.perf_counter()
    girth_value = graph.girth()
    matroid = from_bicircular(BicircularMatroid(graph))
    simple, cosimple = matroid.simplicity()
    census = census_for(graph, enumerator, progress=progress)
    verdicts, witnesses = _census_verdicts(graph, census, girth_value)

    if graph.edge_count <= DUALITY_LIMIT:
        verdicts["duality_check"] = duality_exhaustive(graph)
        if verdicts["duality_check"]["status"] == "fail":
            witnesses.append(
                {"verdict": "duality_check", **verdicts["duality_check"]["witness"]}
            )
    else:
        verdicts["duality_check"] = {
            "status": "skipped",
            "reason": f"exhaustive duality needs m <= {DUALITY_LIMIT}, graph has m = {graph.edge_count}",
        }

    report = {
        "schema": SCHEMA_VERSION,
        "mode": "analyze",
        "graph": {
            "source": source,
            "name": graph.name,
            "vertices": graph.vertex_count,
            "edges": graph.edge_count,
        },
        "girth": None if math.isinf(girth_value) else girth_value,
        "matroid": {
            "rank": matroid.full_rank,
            "corank": matroid.corank,
            "simple": simple,
            "cosimple": cosimple,
        },
        "census": census.to_json(),
        "verdicts": verdicts,
        "witnesses": witnesses,
    }
    if check_set is not None:
        report["check_set"] = evaluate_check_set(graph, check_set, girth_value)
    if fixture is not None:
        report["fixture"] = apply_fixture(fixture, census)
    report["wall_time_s"] = round(time.perf_counter() - start, 3)
    return report


def report_failed(report: dict) -> bool:
    if any(v.get("status") == "fail" for v in report["verdicts"].values()):
        return True
    if report.get("check_set", {}).get("fails"):
        return True
    if report.get("fixture", {}).get("status") == "mismatch":
        return True
    return False


# -- fixed verification suite ----------------------------------------------------


def _u35_graph() -> Multigraph:
    """Triangle on 3 vertices with two of its edges doubled (5 edges)."""
    return Multigraph(3, [(0, 1), (0, 1), (1, 2), (1, 2), (0, 2)], name="triangle+2")


def _u36_graph() -> Multigraph:
    """Triangle with every edge doubled (6 edges)."""
    return Multigraph(
        3, [(0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (0, 2)], name="doubled-triangle"
    )


def duality_corpus() -> list[Multigraph]:
    """Small graphs (m <= 10) covering loops, parallels, disconnection."""
    return [
        bouquet(0),
        bouquet(2),
        bouquet(3),
        bouquet(4),
        banana(2),
        banana(3),
        banana(4),
        banana(5),
        cycle(3),
        cycle(5),
        theta(1, 1, 1),
        theta(1, 2, 2),
        theta(2, 2, 2),
        theta(2, 3, 3),
        handcuff(1, 1, 0),
        handcuff(1, 1, 1),
        handcuff(2, 2, 1),
        handcuff(3, 3, 2),
        complete(4),
        disjoint_union(banana(3), banana(3)),
        disjoint_union(bouquet(2), theta(1, 1, 1)),
        _u35_graph(),
        _u36_graph(),
        random_multigraph(3, 8, seed=11),
        random_multigraph(4, 9, seed=12),
        random_multigraph(5, 10, seed=13),
        random_multigraph(6, 10, seed=14),
    ]


def agreement_corpus() -> list[Multigraph]:
    """Named graphs with m <= 15 for oracle/structural cross-validation."""
    return [
        petersen(),
        complete(4),
        complete(5),
        banana(4),
        banana(6),
        bouquet(4),
        cycle(6),
        theta(2, 3, 3),
        theta(4, 5, 5),
        theta(5, 5, 5),
        handcuff(1, 1, 0),
        handcuff(1, 2, 3),
        handcuff(3, 4, 2),
        handcuff(5, 5, 2),
        disjoint_union(banana(3), banana(3)),
        disjoint_union(theta(1, 1, 1), theta(1, 1, 1)),
        random_multigraph(6, 12, seed=5),
        random_multigraph(5, 14, seed=6),
        random_with_min_girth(10, 13, 5, seed=3),
    ]


def _censuses_agree(a: DoubleCircuitCensus, b: DoubleCircuitCensus) -> bool:
    return a.reports == b.reports


def _claim_petersen(progress: Progress, inject_fault: str | None) -> dict:
    graph = petersen()
    ctx = BicircularMatroid(graph)
    oracle = enumerate_oracle(ctx, progress=progress)
    structural = enumerate_structural(ctx, progress=progress)
    matroid = from_bicircular(ctx)
    simple, cosimple = matroid.simplicity()
    details = {
        "girth": graph.girth(),
        "double_circuits": oracle.total,
        "positive_count": oracle.positive_count,
        "max_degree": max_degree(oracle),
        "enumerators_agree": _censuses_agree(oracle, structural),
        "cosimple": cosimple,
        "corank": matroid.corank,
    }
    ok = (
        details["girth"] == 5
        and details["positive_count"] == 0
        and details["enumerators_agree"]
        and details["max_degree"] <= 6
        and cosimple
        and matroid.corank >= 2
    )
    return _claim_result(
        "petersen",
        "B(Petersen) is cosimple of corank >= 2 and has no positive double "
        "circuits; definitional and structural enumerators agree",
        ok,
        details,
        witness=None if ok else details,
    )


def _claim_dodecahedron(progress: Progress, inject_fault: str | None) -> dict:
    graph = dodecahedron_graph()
    ctx = BicircularMatroid(graph)
    census = enumerate_structural(ctx, progress=progress)
    matroid = from_bicircular(ctx)
    _, cosimple = matroid.simplicity()
    bad_structure = [
        r
        for r in census.reports
        if graph.has_leaves(r.edges)
        or len(r.distinguished_vertices) > 4
        or not r.subdivision_containment
    ]
    details = {
        "girth": graph.girth(),
        "double_circuits": census.total,
        "positive_count": census.positive_count,
        "max_degree": max_degree(census),
        "structure_violations": len(bad_structure),
        "cosimple": cosimple,
        "corank": matroid.corank,
    }
    ok = (
        details["girth"] == 5
        and census.positive_count == 0
        and details["max_degree"] <= 6
        and not bad_structure
        and cosimple
        and matroid.corank >= 2
    )
    return _claim_result(
        "dodecahedron",
        "B(dodecahedron) is cosimple of corank >= 2 and has no positive "
        "double circuits; every double circuit is leaf-free with <= 4 branch "
        "vertices and subdivision classes inside single partition blocks",
        ok,
        details,
        witness=None if ok else details,
    )


def _claim_k4(progress: Progress, inject_fault: str | None) -> dict:
    graph = complete(4)
    ctx = BicircularMatroid(graph)
    census = enumerate_oracle(ctx, progress=progress)
    only = census.reports[0] if census.total == 1 else None
    details = {
        "girth": graph.girth(),
        "double_circuits": census.total,
        "positive_count": census.positive_count,
    }
    ok = (
        census.total == 1
        and only is not None
        and only.edges == frozenset(range(6))
        and only.degree == 6
        and only.positive
    )
    if only is not None:
        details["degree"] = only.degree
        details["positive"] = only.positive
    return _claim_result(
        "k4_tightness",
        "B(K4) has exactly one double circuit — its whole edge set — of "
        "degree exactly 6 and positive, so the degree bound 6 is attained",
        ok,
        details,
        witness=None if ok else details,
    )


_SPECIAL_UNIFORM = {(3, 5), (3, 6), (4, 6)}


def _uniform_admissible(r: int, n: int) -> bool:
    return r in (1, 2, n, n - 1) or (r, n) in _SPECIAL_UNIFORM


def _claim_uniform_scan(progress: Progress, inject_fault: str | None) -> dict:
    # direction 1: every uniform bicircular matroid on <= 4 vertices and
    # <= 6 edges has parameters from the classification
    pair_types = [(i, j) for i in range(4) for j in range(i, 4)]
    scanned = 0
    uniform_found: dict[str, int] = {}
    violations: list[dict] = []
    for m in range(7):
        if progress is not None:
            progress(f"uniform scan: {m}-edge multigraphs on 4 vertices")
        for combo in combinations_with_replacement(pair_types, m):
            scanned += 1
            graph = Multigraph(4, list(combo))
            sig = from_bicircular(BicircularMatroid(graph)).uniform_signature(limit=6)
            if sig is None:
                continue
            r, n = sig
            uniform_found[f"U({r},{n})"] = uniform_found.get(f"U({r},{n})", 0) + 1
            if not _uniform_admissible(r, n):
                violations.append({"edges": list(combo), "signature": [r, n]})
    # direction 2: every classification entry with n <= 6 is realized
    instances = [(bouquet(n), (1, n)) for n in range(1, 7)]
    instances += [(banana(n), (2, n)) for n in range(2, 7)]
    instances += [(cycle(n), (n, n)) for n in range(1, 7)]
    instances += [(bouquet(0), (0, 0))]
    instances += [(bouquet(2), (1, 2))]  # U_{n-1,n} at n = 2
    instances += [(theta(1, 1, n - 2), (n - 1, n)) for n in range(3, 7)]
    instances += [(_u35_graph(), (3, 5)), (_u36_graph(), (3, 6)), (complete(4), (4, 6))]
    mismatches = []
    for graph, expected in instances:
        sig = from_bicircular(BicircularMatroid(graph)).uniform_signature(limit=6)
        if sig != expected:
            mismatches.append(
                {"graph": graph.name, "expected": list(expected), "got": sig and list(sig)}
            )
    details = {
        "multigraphs_scanned": scanned,
        "uniform_signatures": dict(sorted(uniform_found.items())),
        "list_violations": violations,
        "instance_mismatches": mismatches,
    }
    ok = not violations and not mismatches
    return _claim_result(
        "uniform_scan",
        "across all labeled multigraphs with <= 4 vertices and <= 6 edges, "
        "every uniform B(G) is one of U(1,n), U(2,n), U(n,n), U(n-1,n), "
        "U(3,5), U(3,6), U(4,6); each such type with n <= 6 is realized, "
        "including B(K4) = U(4,6) and B(bouquet(n)) = U(1,n)",
        ok,
        details,
        witness=None if ok else details,
    )


def _claim_duality(progress: Progress, inject_fault: str | None) -> dict:
    fault = inject_fault == "dual-rank"
    checked = 0
    pairs = 0
    for graph in duality_corpus():
        if progress is not None:
            progress(f"duality: {graph.name or graph!r}")
        result = duality_exhaustive(graph, inject_fault=fault)
        if result["status"] == "fail":
            return _claim_result(
                "duality_small",
                _DUALITY_STATEMENT,
                False,
                {"graphs_checked": checked},
                witness=result["witness"],
            )
        checked += 1
        pairs += result["matching_pairs"]
    return _claim_result(
        "duality_small",
        _DUALITY_STATEMENT,
        True,
        {"graphs_checked": checked, "matching_pairs": pairs},
    )


_DUALITY_STATEMENT = (
    "for every corpus graph with m <= 10 and every L ⊆ E: L is a coline of "
    "the dual of B(G) iff E−L is a double circuit of B(G), with identical "
    "partitions"
)


def _claim_agreement(progress: Progress, inject_fault: str | None) -> dict:
    results = {}
    for graph in agreement_corpus():
        if progress is not None:
            progress(f"agreement: {graph.name}")
        ctx = BicircularMatroid(graph)
        oracle = enumerate_oracle(ctx)
        structural = enumerate_structural(ctx)
        if not _censuses_agree(oracle, structural):
            only_oracle = [sorted(r.edges) for r in oracle.reports if r not in structural.reports]
            only_structural = [
                sorted(r.edges) for r in structural.reports if r not in oracle.reports
            ]
            return _claim_result(
                "enumerator_agreement",
                _AGREEMENT_STATEMENT,
                False,
                {"graphs_checked": len(results)},
                witness={
                    "graph": graph.name,
                    "only_oracle": only_oracle,
                    "only_structural": only_structural,
                },
            )
        results[graph.name] = oracle.total
    return _claim_result(
        "enumerator_agreement",
        _AGREEMENT_STATEMENT,
        True,
        {"census_sizes": results},
    )


_AGREEMENT_STATEMENT = (
    "the definitional subset-scan enumerator and the structural growth "
    "enumerator produce identical censuses on every named corpus graph with "
    "m <= 15"
)


def _claim_result(name, statement, ok, details, witness=None) -> dict:
    out = {
        "name": name,
        "statement": statement,
        "status": "pass" if ok else "fail",
        "details": details,
    }
    if witness is not None:
        out["witness"] = witness
    return out


_CLAIMS = {
    "petersen": _claim_petersen,
    "dodecahedron": _claim_dodecahedron,
    "k4_tightness": _claim_k4,
    "uniform_scan": _claim_uniform_scan,
    "duality_small": _claim_duality,
    "enumerator_agreement": _claim_agreement,
}


def verify_claims(
    claims: list[str] | None = None,
    inject_fault: str | None = None,
    progress: Progress = None,
) -> dict:
    """Run the fixed verification suite (or a named subset of its claims)."""
    start = time.perf_counter()
    selected = list(_CLAIMS) if claims is None else claims
    unknown = [c for c in selected if c not in _CLAIMS]
    if unknown:
        raise ValueError(
            f"unknown claims: {', '.join(unknown)}; known: {', '.join(_CLAIMS)}"
        )
    if inject_fault is not None and inject_fault != "dual-rank":
        raise ValueError(f"unknown fault {inject_fault!r}; known: dual-rank")
    results = [_CLAIMS[name](progress, inject_fault) for name in selected]
    return {
        "schema": SCHEMA_VERSION,
        "mode": "verify",
        "claims": results,
        "all_pass": all(c["status"] == "pass" for c in results),
        "wall_time_s": round(time.perf_counter() - start, 3),
    }


# -- randomized sweep --------------------------------------------------------


def search_sweep(
    n: int,
    m: int,
    min_girth: int,
    count: int,
    seed: int,
    enumerator: str = "structural",
    max_tries: int = 20000,
    progress: Progress = None,
) -> dict:
    """Generate ``count`` random simple graphs with girth >= min_girth and
    report every positive double circuit found (none are expected at girth
    >= 5; a hit there would be a bug or a counterexample)."""
    start = time.perf_counter()
    master = random.Random(seed)
    graph_seeds = [master.randrange(2**31) for _ in range(count)]
    witnesses = []
    girths: dict[str, int] = {}
    for index, graph_seed in enumerate(graph_seeds):
        graph = random_with_min_girth(n, m, min_girth, graph_seed, max_tries)
        if progress is not None and (index + 1) % 10 == 0:
            progress(f"sweep: {index + 1}/{count} graphs")
        census = census_for(graph, enumerator)
        g = graph.girth()
        key = "inf" if math.isinf(g) else str(g)
        girths[key] = girths.get(key, 0) + 1
        for report in census.reports:
            if report.positive:
                witnesses.append(
                    {
                        "graph_index": index,
                        "graph_seed": graph_seed,
                        "graph_edges": [list(e) for e in graph.edges],
                        **report.to_json(),
                    }
                )
    return {
        "schema": SCHEMA_VERSION,
        "mode": "search",
        "params": {
            "n": n,
            "m": m,
            "min_girth": min_girth,
            "count": count,
            "seed": seed,
            "enumerator": enumerator,
        },
        "graphs_scanned": count,
        "girth_histogram": dict(sorted(girths.items())),
        "positives_found": len(witnesses),
        "witnesses": witnesses,
        "status": "positives-found" if witnesses else "clean",
        "wall_time_s": round(time.perf_counter() - start, 3),
    }
