"""The acceptance criteria, one test each, with their time limits.

Every comparison inside the suites is exact. Each test records a one-line verdict that the
conftest hook prints at the end of the run.
"""
import json
import time

import pytest

from conftest import CRITERIA_LINES
from supplycat import cli
from supplycat.suites import SuiteConfig, run_suite, suite_names


def record(n, title, limit, reports, started, extra=()):
    elapsed = time.perf_counter() - started
    failed = [f"{r.suite}:{e.id}" for r in reports for e in r.failures]
    problems = failed + list(extra)
    ok = not problems and elapsed < limit
    line = f"criterion {n:2} {'PASS' if ok else 'FAIL'}  {title}  ({elapsed:.1f}s, limit {limit}s)"
    if problems:
        line += "  first problem: " + problems[0]
    CRITERIA_LINES[n] = line
    print(line)
    assert not problems, problems
    assert elapsed < limit, f"took {elapsed:.1f}s"


def prefixes(report):
    return {e.id.split("/")[0] for e in report.entries}


def witness(report, entry_id):
    return report.entry(entry_id).witness or {}


def test_criterion_01_prop_axioms():
    t = time.perf_counter()
    r = run_suite(SuiteConfig("prop-axioms", max_arity=3, max_apex=4))
    extra = [] if prefixes(r) == {"B", "Inv", "FinSet", "FinSet^op", "Cospan", "Cob"} else ["props"]
    record(1, "prop axioms for B, Inv, FinSet, FinSet^op, Cospan, Cob", 30, [r], t, extra)


def test_criterion_02_presentations():
    t = time.perf_counter()
    r = run_suite(SuiteConfig("presentations"))
    extra = []
    for needed in ("monoid-in-FinSet/relation/03", "self-dual-in-Cospan/relation/04",
                   "self-dual-snakes/snake/left", "self-dual-snakes/snake/right"):
        if needed not in {e.id for e in r.entries}:
            extra.append(f"missing {needed}")
    # the corrupted fixture is expected to fail, and must name a counterexample
    if not witness(r, "corrupted-cup/corrupted-fails"):
        extra.append("corrupted cup has no counterexample")
    record(2, "monoid, self-dual and snake relations; corrupted cup caught", 1, [r], t, extra)


def test_criterion_03_smc_axioms():
    t = time.perf_counter()
    r = run_suite(SuiteConfig("smc-axioms", max_leaf=2, max_depth=3))
    extra = [] if prefixes(r) == {"Rel", "NestedRel", "MatQ", "Terminal", "Rel+Rel"} else ["instances"]
    record(3, "SMC axioms for Rel, NestedRel, MatQ, Terminal, Rel+Rel", 60, [r], t, extra)


SUPPLY_SUITES = ["rel-hypergraph", "matq-self-dual", "nested-rel-hypergraph", "finsetcat-comonoid",
                 "self-supply", "terminal", "biproduct-supply"]


def test_criterion_04_supplies():
    t = time.perf_counter()
    reports = [run_suite(SuiteConfig(s, max_arity=2, max_apex=3)) for s in SUPPLY_SUITES]
    reports.append(run_suite(SuiteConfig("self-supply", max_arity=3, max_apex=3, instance="FinSet")))
    record(4, "supply axioms for the seven supplies", 120, reports, t)


def test_criterion_05_coherence_homomorphisms():
    t = time.perf_counter()
    r = run_suite(SuiteConfig("coherence-homomorphisms"))
    extra = [] if r.entry("NestedRel/nontrivial-associator").ok else ["all associators trivial"]
    extra += [] if {"NestedRel", "Rel", "MatQ"} <= prefixes(r) else ["instances"]
    record(5, "coherence isos are homomorphisms; a non-identity associator tested", 60, [r], t, extra)


def test_criterion_06_homomorphisms_closed():
    t = time.perf_counter()
    r = run_suite(SuiteConfig("homomorphic-subcategory", max_leaf=2))
    extra = [] if r.bounds["homomorphisms"] and r.bounds["non_homomorphisms"] else ["degenerate sample"]
    record(6, "homomorphisms closed under composition and tensor in Rel", 60, [r], t, extra)


def test_criterion_07_examples():
    t = time.perf_counter()
    r = run_suite(SuiteConfig("examples"))
    extra = []
    if witness(r, "empty-relation/not-a-homomorphism").get("mu_generator") != "epsilon":
        extra.append("empty relation witness is not epsilon")
    for needed in ("functional-relations/exactly-functions", "orthogonal-matrices/exactly-orthogonal",
                   "orthogonal-matrices/non-permutation", "finsetcat-homomorphic/homomorphic"):
        if needed not in {e.id for e in r.entries}:
            extra.append(f"missing {needed}")
    record(7, "empty relation, functional relations, orthogonal matrices, FinSetCat", 30, [r], t, extra)


def test_criterion_08_transfer():
    t = time.perf_counter()
    r = run_suite(SuiteConfig("transfer", max_arity=2, max_apex=3))
    ids = {e.id for e in r.entries}
    needed = ["FinSet^op->Cospan/delta-is-diagonal", "FinSet^op->Cospan/epsilon-is-total",
              "FinSet^op->Cospan/tensor-square", "Cob->Cospan/tensor-square",
              "NestedRel->Rel/tensor-square"]
    record(8, "transfer along FinSet^op, Cob and a strict surjection", 60, [r], t,
           [f"missing {n}" for n in needed if n not in ids])


def test_criterion_09_strictification():
    t = time.perf_counter()
    r = run_suite(SuiteConfig("strictification"))
    needed = {"smc-axioms", "strict-coherence", "supply", "preserves", "strongator-homomorphisms"}
    record(9, "strict category, strict supply, evaluation preserves it", 60, [r], t,
           [f"missing {n}" for n in needed - prefixes(r)])


def test_criterion_10_preservation_negative():
    t = time.perf_counter()
    r = run_suite(SuiteConfig("preservation-negative"))
    extra = []
    if witness(r, "identity/fails-at-cup").get("mu_generator") != "cup":
        extra.append("witness is not cup")
    record(10, "rescaled supply is a supply; identity fails to preserve at cup", 5, [r], t, extra)


def test_criterion_11_biproduct():
    t = time.perf_counter()
    r = run_suite(SuiteConfig("biproduct"))
    ids = {e.id for e in r.entries}
    needed = ["universal/unit", "universal/projection0/strict", "universal/projection1/strict",
              "universal/copairing/objects", "pi0/square", "pi1/square", "iota0/square",
              "iota1/square"]
    record(11, "biproduct unit, projections, copairing; supply preserved", 30, [r], t,
           [f"missing {n}" for n in needed if n not in ids])


CLI_BOUNDS = ["--max-leaf", "2", "--max-depth", "2", "--max-arity", "2", "--max-apex", "2"]


def test_criterion_12_cli_contract(capsys, monkeypatch, tmp_path):
    t = time.perf_counter()
    extra = []
    for name in suite_names():
        argv = ["check", name, *CLI_BOUNDS, "--seed", "3", "--format", "json"]
        if name == "presentation":
            path = tmp_path / "pres.txt"
            path.write_text("gen mu 2 1\ngen eta 0 1\nrel comp braid 1 1 mu = mu\n")
            argv += ["--presentation", str(path), "--target", "FinSet"]
        monkeypatch.delenv("SUPPLYCAT_THREADS", raising=False)
        code = cli.main(argv)
        out = capsys.readouterr().out
        monkeypatch.setenv("SUPPLYCAT_THREADS", "3")
        again = cli.main(argv)
        out_again = capsys.readouterr().out
        doc = json.loads(out)
        if (code, out) != (again, out_again):
            extra.append(f"{name}: not deterministic")
        if set(doc) != {"suite", "bounds", "entries"} or doc["suite"] != name:
            extra.append(f"{name}: bad schema")
        if any(not {"id", "anchor", "status"} <= set(e) <= {"id", "anchor", "status", "witness"}
               for e in doc["entries"]):
            extra.append(f"{name}: bad entry schema")
        recomputed = 0 if all(e["status"] != "fail" for e in doc["entries"]) else 1
        if recomputed != code:
            extra.append(f"{name}: exit {code} but verdict {recomputed}")
        expected = 1 if name == "fixtures/broken-supply" else 0
        if code != expected:
            extra.append(f"{name}: exit {code}, expected {expected}")
    for bad in (["check", "no-such-suite"], ["check", "terminal", "--max-depth", "-2"]):
        if cli.main(bad) != 2:
            extra.append(f"{bad}: usage error not reported as 2")
    capsys.readouterr()
    with capsys.disabled():
        record(12, "every suite runs by name; exit codes, schema, determinism", 600, [], t, extra)


@pytest.mark.parametrize("name", ["rel-hypergraph"])
def test_documented_cli_example(capsys, name):
    code = cli.main(["check", name, "--max-leaf", "2", "--max-arity", "2", "--max-apex", "3",
                     "--format", "json"])
    capsys.readouterr()
    assert code == 0
