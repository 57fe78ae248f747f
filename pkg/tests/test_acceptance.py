"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line with its runtime; run with
``pytest tests/test_acceptance.py -s`` to see them, or execute this file
directly for the same lines without pytest.
"""

from __future__ import annotations

import time

from affine_nichols import affine_weyl as aw
from affine_nichols import alcove, nichols as nc, nilhecke as nh, poly, quadratic, verify
from affine_nichols.nichols import TensorElement
from affine_nichols.roots import preset


def _report(number: int, title: str, ok: bool, elapsed: float, limit: float, detail: str = "") -> None:
    within = elapsed < limit
    status = "PASS" if ok and within else "FAIL"
    extra = f"  {detail}" if detail else ""
    print(f"\n[{status}] {number:2d} {title}: {elapsed:.2f}s (limit {limit:g}s){extra}")
    assert ok, detail or title
    assert within, f"{title} took {elapsed:.2f}s, limit {limit:g}s"


class _Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def test_rank_two_coxeter_identities():
    with _Timer() as t:
        found = []
        for name in ("A2", "B2", "G2"):
            sys = preset(name)
            for ident, elem in verify.rank_two_identities(sys):
                found.append((ident, max(elem.degrees()), nc.is_zero_in_B(elem)))
    ok = len(found) == 4 and all(z and d <= 4 for _, d, z in found)
    _report(1, "rank-2 Coxeter identities vanish", ok, t.elapsed, 10,
            ", ".join(f"{i}={'0' if z else 'nonzero'}" for i, _, z in found))


def test_four_crossing_path_pipeline():
    sys = preset("A2")
    with _Timer() as t:
        path = alcove.alcove_path_to(aw.translation(sys, (1, 0)))
        crossings = tuple(path.crossings)
        value = nc.d_word(alcove.gamma_word(path), (2, 0, 2, 1))
    ok = crossings == verify.EXAMPLE_CROSSINGS and value == TensorElement.scalar(sys, 1)
    _report(2, "four-crossing path and its contraction", ok, t.elapsed, 1,
            f"crossings={crossings} value={nc.format_tensor(value)}")


def test_path_word_contracts_to_one():
    with _Timer() as t:
        results = {}
        for name, max_len in (("A2", 6), ("B2", 4), ("G2", 4)):
            cfg = verify.RunConfig(preset(name), ("lemma31",), max_len)
            (entry,) = [c for c in verify.suite_lemma31(cfg) if c["id"] == "lemma31.sweep"]
            results[name] = entry
    ok = all(e["status"] == "pass" for e in results.values())
    counts = {n: e["witness"]["elements"] for n, e in results.items()}
    ok = ok and counts["A2"] == len(aw.bfs_oracle(preset("A2"), 6))
    _report(3, "path words contract to 1", ok, t.elapsed, 60, f"elements={counts}")


def test_path_word_independent_of_reduced_word():
    sys = preset("A2")
    with _Timer() as t:
        elems = aw.bfs_oracle(sys, 6)
        ok, stats = verify._path_independence(sys, elems)
    _report(4, "path word independent of reduced word", ok, t.elapsed, 120,
            f"comparisons={stats['comparisons']}")


def test_contraction_rule_matches_tensor_model():
    with _Timer() as t:
        ok, stats = verify.lemma41_cross_model(preset("A2"), max_len=5, max_level=4)
    ok = ok and stats["survive"] > 0 and stats["zero"] > 0
    _report(5, "contraction rule matches tensor model", ok, t.elapsed, 120,
            f"survive={stats['survive']} zero={stats['zero']}")


def test_beta_matches_affine_bruhat_operator():
    with _Timer() as t:
        a2_ok, a2 = verify.prop42_samples(preset("A2"), 50, seed=0)
        a3_ok, a3 = verify.prop42_samples(preset("A3"), 20, seed=0)
    _report(6, "beta operator equals affine Bruhat operator", a2_ok and a3_ok, t.elapsed, 60,
            f"A2 instances={a2['instances']} A3 instances={a3['instances']}")


def test_quadratic_relations():
    with _Timer() as t:
        reports = {n: quadratic.verify_prop51(n, trials=25, seed=0) for n in (3, 4)}
        deg2 = quadratic.degree_two_identities(3) + quadratic.degree_two_identities(4)
    statuses = [e["status"] for r in reports.values() for e in r["entries"]]
    cases = {n: r["cases"] for n, r in reports.items()}
    ok = (statuses and all(s == "pass" for s in statuses)
          and all(c["case-1"] > 0 and c["case-2"] > 0 for c in cases.values())
          and all(e["status"] == "pass" for e in deg2))
    _report(7, "quadratic relations", ok, t.elapsed, 60,
            f"relations={len(statuses)} cases={cases} degree-two={len(deg2)}")


def test_nilhecke_layer():
    sys = preset("A2")
    with _Timer() as t:
        rel = nh.verify_nilcoxeter_relations(sys)
        props = verify.polynomial_properties(sys, trials=100, seed=0, max_degree=5)
        images = verify.generator_relation_images(sys)
        killed = all(nc.is_zero_in_B(img) for _, img in images)
        elems = aw.bfs_oracle(sys, 6)
        zeros = [x for x in elems if nc.is_zero_in_B(nc.phi_tau(x))]
    core = {k: props[k] for k in ("nilpotent", "braid", "leibniz")}
    ok = all(e["status"] == "pass" for e in rel) and not any(props.values()) and killed and not zeros
    _report(8, "nil-Hecke relations and phi", ok, t.elapsed, 60,
            f"failures={core} images={len(images)} nonzero={len(elems) - len(zeros)}/{len(elems)}")


def test_dunkl_operators_commute():
    with _Timer() as t:
        entries = quadratic.verify_dunkl(3, 25, 0) + quadratic.verify_dunkl(4, 25, 0)
    comm = [e for e in entries if e["relation"].startswith("[")]
    ok = comm and all(e["status"] == "pass" for e in entries)
    _report(9, "Dunkl-type operators commute", ok, t.elapsed, 30, f"commutators={len(comm)}")


def test_centralizer_smoke():
    sys = preset("A2")
    with _Timer() as t:
        f = poly.parse_polynomial("w1^2 - 3*w1*w2 + 5", sys.rank)
        poly_ok = nh.centralizer_test(nh.NilHeckeElement.polynomial(sys, f))
        tau_fail = [not nh.centralizer_test(nh.NilHeckeElement.tau(sys, i)) for i in range(sys.rank + 1)]
    _report(10, "polynomials centralize S, tau_i do not", poly_ok and all(tau_fail), t.elapsed, 1)


if __name__ == "__main__":
    import sys as _sys

    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    _sys.exit(1 if failed else 0)
