"""Named verification suites over a seeded desk-scale corpus."""

from __future__ import annotations

import random
from itertools import combinations

from . import families
from .flow import mixed_connectivity
from .graph import Graph, components_after_removal
from .index import answer_value, build, query, verify_answer
from .oracle import (
    check_classification_exhaustive,
    check_laminar_structure,
    check_small_uniqueness,
    check_wheel_interactions,
    enumerate_min_cuts,
)

SUITES = ("classification", "wheels", "laminar", "small", "index")


def classification_corpus(seed: int) -> list[tuple[str, Graph]]:
    rng = random.Random(seed)
    graphs: list[tuple[str, Graph]] = [
        ("cycle8", families.cycle(8)),
        ("cycle10", families.cycle(10)),
        ("petersen", families.petersen()),
        ("ladder6", families.ladder(6)),
        ("ladder7", families.ladder(7)),
        ("matched3", families.two_cliques_matched(3)),
        ("chain3", families.clique_chain(3, 4, 2)),
    ]
    for i in range(8):
        n = rng.randint(8, 13)
        p = rng.uniform(0.25, 0.5)
        graphs.append((f"random{i}-n{n}", families.random_connected(n, p, rng)))
    return graphs


def run_classification(seed: int) -> list[dict]:
    reports = []
    for name, g in classification_corpus(seed):
        rep = check_classification_exhaustive(g)
        doc = rep.to_json()
        doc["instance"] = name
        reports.append(doc)
    return reports


def run_wheels(seed: int) -> list[dict]:
    reports = []
    for name, g in classification_corpus(seed):
        rep = check_wheel_interactions(g)
        doc = rep.to_json()
        doc["instance"] = name
        reports.append(doc)
    return reports


def run_laminar(seed: int) -> list[dict]:
    rng = random.Random(seed)
    instances: list[tuple[str, Graph]] = [
        ("chain3", families.clique_chain(3, 4, 2)),
        ("chain2", families.clique_chain(2, 6, 2)),
        ("ladder7", families.ladder(7)),
    ]
    for i in range(5):
        n = rng.randint(9, 13)
        instances.append(
            (f"random{i}-n{n}", families.random_connected(n, rng.uniform(0.25, 0.45), rng))
        )
    reports = []
    for name, g in instances:
        kappa, cuts = enumerate_min_cuts(g)
        ran = 0
        for u in cuts:
            part = components_after_removal(g, u)
            for a in range(part.side_count()):
                rep = check_laminar_structure(g, u, a)
                if rep.skipped:
                    continue
                ran += 1
                doc = rep.to_json()
                doc["instance"] = f"{name}/{sorted(u)}/side{a}"
                reports.append(doc)
        if ran == 0:
            reports.append(
                {
                    "name": "laminar-structure",
                    "ok": True,
                    "counts": {},
                    "counterexamples": [],
                    "skipped": "no eligible reference cut",
                    "instance": name,
                }
            )
    return reports


def run_small(seed: int) -> list[dict]:
    reports = []
    for name, g in classification_corpus(seed):
        bad = []
        for u in range(g.n):
            rep = check_small_uniqueness(g, u)
            if not rep.ok:
                bad.extend(rep.counterexamples)
        reports.append(
            {
                "name": "small-uniqueness",
                "ok": not bad,
                "counts": {"vertices": g.n},
                "counterexamples": bad,
                "skipped": None,
                "instance": name,
            }
        )
    return reports


def run_index(seed: int) -> list[dict]:
    rng = random.Random(seed)
    graphs: list[tuple[str, Graph]] = [
        ("petersen", families.petersen()),
        ("cycle8", families.cycle(8)),
        ("ladder6", families.ladder(6)),
    ]
    for i in range(4):
        n = rng.randint(8, 22)
        graphs.append(
            (f"random{i}-n{n}", families.random_connected(n, rng.uniform(0.2, 0.5), rng))
        )
    reports = []
    for name, g in graphs:
        exact = build(g, mode="exact")
        rnd = build(g, seed=seed, mode="randomized")
        mismatches = []
        for u, v in combinations(range(g.n), 2):
            ans = query(exact, u, v)
            want = min(mixed_connectivity(g, u, v), exact.kappa + 1)
            if answer_value(exact, ans) != want or not verify_answer(g, exact, u, v, ans):
                mismatches.append({"pair": [u, v], "want": want, "verdict": ans.verdict})
        if exact.records != rnd.records:
            mismatches.append({"error": "randomized build differs", "seed": seed})
        reports.append(
            {
                "name": "index-queries",
                "ok": not mismatches,
                "counts": {"pairs": g.n * (g.n - 1) // 2, "kappa": exact.kappa},
                "counterexamples": mismatches,
                "skipped": None,
                "instance": name,
            }
        )
    return reports


def run_suite(suite: str, seed: int) -> list[dict]:
    runner = {
        "classification": run_classification,
        "wheels": run_wheels,
        "laminar": run_laminar,
        "small": run_small,
        "index": run_index,
    }.get(suite)
    if runner is None:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    return runner(seed)
