"""Recompute every published number and compare."""
from __future__ import annotations

import time

from . import discovery, enumeration, morphisms, reference, tree
from .words import AvoidanceSpec, find_violation


def _row(name, expected, observed, passed, seconds):
    return {"check": name, "expected": expected, "observed": observed,
            "passed": bool(passed), "seconds": round(seconds, 3)}


def run_all(include_discovery: bool = True) -> list[dict]:
    rows = []

    for (l, p), (n, h, t, words) in reference.KNOWN_TREES.items():
        t0 = time.perf_counter()
        rep = tree.explore(AvoidanceSpec.parse(l, p))
        obs = None
        if isinstance(rep, tree.TreeReport):
            obs = [rep.leaves, rep.height, rep.maximal_count,
                   [str(w) for w in rep.maximal_words_starting_with_zero]]
        rows.append(_row(f"tree l={l} p={p}", [n, h, t, words], obs,
                         obs == [n, h, t, words], time.perf_counter() - t0))

    for key, spec in reference.COUNT_SPECS.items():
        t0 = time.perf_counter()
        counts = list(enumeration.count_avoiding(spec, 25).counts)
        expected = reference.KNOWN_COUNTS[key]
        rows.append(_row(f"counts {key} {spec}", expected, counts, counts == expected,
                         time.perf_counter() - t0))

    for name, spec in morphisms.TARGETS.items():
        t0 = time.perf_counter()
        m = morphisms.get(name)
        verdict = morphisms.verify(m, spec)
        rows.append(_row(f"verify {name} {spec}", True, verdict["passed"], verdict["passed"],
                         time.perf_counter() - t0))
        t0 = time.perf_counter()
        w = morphisms.generate_avoiding(name, 10 * m.width)
        v = find_violation(w, spec)
        rows.append(_row(f"generate {name} length {len(w)}", None,
                         None if v is None else v.as_dict(), v is None, time.perf_counter() - t0))

    t0 = time.perf_counter()
    g = enumeration.growth_upper(enumeration.ForbiddenSet.of(["0000", "1111"]))
    rows.append(_row("upper {0000,1111}", 1.8392868, round(g.value, 9),
                     abs(g.value - 1.8392868) < 1e-6, time.perf_counter() - t0))
    for key, (cap, size, root) in reference.KNOWN_UPPER.items():
        t0 = time.perf_counter()
        forbidden = enumeration.minimal_forbidden(reference.COUNT_SPECS[key], cap)
        g = enumeration.growth_upper(forbidden)
        rows.append(_row(f"upper {key} cap {cap}", [size, root], [len(forbidden), round(g.value, 9)],
                         abs(g.value - root) < 1e-2, time.perf_counter() - t0))
    for width, value in reference.KNOWN_LOWER.items():
        t0 = time.perf_counter()
        g = enumeration.growth_lower_from_morphism(width)
        rows.append(_row(f"lower width {width}", value, round(g.value, 10),
                         abs(g.value - value) < 1e-6, time.perf_counter() - t0))

    for name, spec, window in (("g1", AvoidanceSpec.parse(4, "5/2+"), 13),
                               ("h1", AvoidanceSpec.parse(7, "7/3+"), 9)):
        t0 = time.perf_counter()
        rep = discovery.infer_avoided_blocks(morphisms.get(name), spec, window)
        obs = [str(b) for b in rep.squarefree()]
        expected = reference.KNOWN_AVOIDED_BLOCKS[name]
        rows.append(_row(f"avoided blocks {name}", expected, obs, obs == expected,
                         time.perf_counter() - t0))

    if include_discovery:
        t0 = time.perf_counter()
        spec = morphisms.TARGETS["f"]
        analysis = discovery.block_filter(spec, 10, 3, 60)
        cands = discovery.propose_morphisms(spec, 10, 3, analysis=analysis)
        f_images = set(morphisms.get("f").images)
        hit = any(set(c.images) == f_images for c in cands)
        rows.append(_row("discover f (k=10)", True, {"candidates": len(cands), "contains_f": hit},
                         hit and not analysis.exhausted, time.perf_counter() - t0))
    return rows
