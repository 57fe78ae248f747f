"""Verification suites shared by the command line and the test suite.

Each suite returns a list of check entries ``{id, paper_ref, status, witness}``
with status ``pass``, ``fail`` or ``skipped``.  The ``paper_ref`` field
names the identity being checked.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from . import affine_weyl as aw
from . import alcove, bruhat_ops as bo, nichols as nc, nilhecke as nh, poly, quadratic
from .nichols import TensorElement, label
from .roots import RootSystem, type_a_rank

SUITES = ("coxeter", "lemma31", "lemma41", "prop42", "prop51", "nilhecke", "poly")


@dataclass
class RunConfig:
    system: RootSystem
    suites: tuple[str, ...] = SUITES
    max_length: int | None = None
    trials: int = 25
    seed: int = 0
    margin: int = 0
    k_lower_bound: int = 2
    extra: dict = field(default_factory=dict)


def check(cid: str, ref: str, ok: bool | None, witness=None, reason: str | None = None) -> dict:
    status = "skipped" if ok is None else ("pass" if ok else "fail")
    out = {"id": cid, "paper_ref": ref, "status": status, "witness": witness}
    if reason:
        out["reason"] = reason
    return out


def _word(system, *letters):
    return TensorElement.word(system, letters)


# -- coxeter -----------------------------------------------------------------------


def rank_two_identities(system: RootSystem) -> list[tuple[str, TensorElement]]:
    """The listed rank-2 Coxeter relations involving ``[theta,1]``, when the system is one of A2, B2, G2."""
    th = label(system, system.highest_root, 1)
    simple = [label(system, system.roots[s]) for s in system.simple_indices]
    name = system.name
    if name == "A2":
        a1, a2 = simple
        return [("A2.theta-a2", _word(system, th, a2, th) + _word(system, a2, th, a2)),
                ("A2.theta-a1", _word(system, th, a1, th) + _word(system, a1, th, a1))]
    if name == "B2":
        a2 = simple[1]
        return [("B2.theta-a2", _word(system, th, a2, th, a2) - _word(system, a2, th, a2, th))]
    if name == "G2":
        a2 = simple[1]
        return [("G2.theta-a2", _word(system, th, a2, th) + _word(system, a2, th, a2))]
    return []


def generator_relation_images(system: RootSystem) -> list[tuple[str, TensorElement]]:
    """Images under phi of ``tau_i^2`` and of every finite braid relation."""
    g = [nc.generator_label(system, i) for i in range(system.rank + 1)]
    out = []
    for i in range(system.rank + 1):
        out.append((f"square.{i}", _word(system, g[i], g[i])))
    for i, j in itertools.combinations(range(system.rank + 1), 2):
        m = aw.coxeter_exponent(system, i, j)
        if m is None:
            continue
        left = [g[i] if t % 2 == 0 else g[j] for t in range(m)]
        right = [g[j] if t % 2 == 0 else g[i] for t in range(m)]
        out.append((f"braid.{i}{j}", _word(system, *left) - _word(system, *right)))
    return out


def suite_coxeter(cfg: RunConfig) -> list[dict]:
    sys = cfg.system
    out = []
    for name, t in rank_two_identities(sys):
        out.append(check(f"coxeter.rank2.{name}", "rank-2 Coxeter relation with [theta,1]",
                         nc.is_zero_in_B(t), {"element": nc.format_tensor(t)}))
    for name, t in generator_relation_images(sys):
        cap = max(t.degrees(), default=0)
        if cap > nc.SYMMETRIZER_CAP:
            out.append(check(f"coxeter.phi.{name}", "nil-Coxeter relation image vanishes", None,
                             reason="degree above symmetrizer cap"))
            continue
        out.append(check(f"coxeter.phi.{name}", "nil-Coxeter relation image vanishes",
                         nc.is_zero_in_B(t), {"degree": cap}))
    for a in (label(sys, s, k) for s in sys.positive_roots for k in (-1, 0, 1)):
        t = _word(sys, a, a)
        out.append(check(f"coxeter.square.{nc.format_label(sys, a)}", "square of a generator vanishes",
                         nc.is_zero_in_B(t)))
    return out


# -- alcove paths and the contraction identity ------------------------------------------


EXAMPLE_CROSSINGS = (((0, -1), 0), ((1, 0), 1), ((1, 1), 1), ((1, 0), 2))


def example_path_checks(system: RootSystem) -> list[dict]:
    """The four-step path to ``t_{alpha_1}`` of the fundamental alcove in A2."""
    if system.name != "A2":
        return []
    y = aw.translation(system, (1, 0))
    path = alcove.alcove_path_to(y)
    gamma = alcove.gamma_word(path)
    value = nc.d_word(gamma, (2, 0, 2, 1))
    crossings = tuple((b, k) for b, k in path.crossings)
    return [
        check("lemma31.example.crossings", "four-crossing path to t_{alpha_1}",
              crossings == EXAMPLE_CROSSINGS, {"crossings": path.to_json(), "word": list(path.word)}),
        check("lemma31.example.gamma", "word of the four-crossing path",
              nc.format_tensor(gamma) == "-[23,0][12,1][13,1][12,2]",
              {"gamma": nc.format_tensor(gamma)}),
        check("lemma31.example.contraction", "contraction of the path word by D_2 D_0 D_2 D_1",
              value == TensorElement.scalar(system, 1), {"value": nc.format_tensor(value)}),
    ]


def _default_length(system: RootSystem, big: int = 6, small: int = 4) -> int:
    return big if system.name == "A2" else small


def suite_lemma31(cfg: RunConfig) -> list[dict]:
    sys = cfg.system
    max_len = cfg.max_length or _default_length(sys)
    out = example_path_checks(sys)
    try:
        elems = aw.bfs_oracle(sys, max_len)
    except aw.LengthBoundError as exc:
        return out + [check("lemma31.sweep", "path word contracts to 1", None, reason=str(exc))]
    bad = []
    for x in sorted(elems, key=lambda e: (elems[e], aw.reduced_word(e))):
        if nc.d_x(alcove.bracket(x), x) != TensorElement.scalar(sys, 1):
            bad.append(aw.reduced_word(x))
    out.append(check("lemma31.sweep", "path word contracts to 1", not bad,
                     {"elements": len(elems), "max_length": max_len, "failures": bad[:10]}))
    out.append(check("lemma31.path_independence", "path word independent of the reduced path",
                     *_path_independence(sys, elems)))
    return out


def _path_independence(sys, elems):
    bad = []
    compared = 0
    for x in elems:
        words = aw.all_reduced_words(x)
        first = alcove.bracket(x, words[0])
        for w in words[1:]:
            compared += 1
            if not nc.equal_in_B(first, alcove.bracket(x, w)):
                bad.append(w)
    return not bad, {"comparisons": compared, "failures": bad[:10]}


# -- contraction rule ----------------------------------------------------------------------


def lemma41_cross_model(system: RootSystem, max_len: int = 5, max_level: int = 4) -> tuple[bool, dict]:
    """Tensor-model differential of ``<x>`` against the combinatorial rule."""
    elems = aw.bfs_oracle(system, max_len)
    stats = {"survive": 0, "zero": 0, "mismatch": []}
    for x in sorted(elems, key=lambda e: (elems[e], aw.reduced_word(e))):
        tx = bo.tensor_representative(x)
        for root in system.roots:
            for k in range(1, max_level + 1):
                got = nc.differential(tx, label(system, root, k))
                y = bo.lemma41_rule(x, root, k)
                if y is None:
                    ok = nc.is_zero_in_B(got)
                    stats["zero"] += 1
                else:
                    ok = nc.equal_in_B(got, bo.tensor_representative(y))
                    stats["survive"] += 1
                if not ok:
                    stats["mismatch"].append({"x": aw.reduced_word(x), "root": list(root), "k": k})
    stats["elements"] = len(elems)
    stats["mismatch"] = stats["mismatch"][:10]
    return not stats["mismatch"], stats


def suite_lemma41(cfg: RunConfig) -> list[dict]:
    max_len = cfg.max_length or _default_length(cfg.system, 5, 3)
    ok, stats = lemma41_cross_model(cfg.system, max_len)
    return [check("lemma41.cross_model", "contraction rule on path words", ok, stats)]


# -- affine Bruhat operators ----------------------------------------------------------------


def prop42_samples(system: RootSystem, per_chamber: int, seed: int, margin: int = 0,
                   k_lower_bound: int = 2) -> tuple[bool, dict]:
    rng = random.Random(seed)
    r = system.rank
    mismatches = []
    count = 0
    for v in system.elements():
        for _ in range(per_chamber):
            x = bo.random_superregular(system, rng, v=v, slack=margin + 4)
            m = bo.RegularModuleElement.basis(x)
            for j in range(r):
                mu = tuple(int(i == j) for i in range(r))
                lhs = bo.beta_op(mu, m, k_lower_bound=k_lower_bound, margin=margin)
                rhs = bo.iota(bo.affine_bruhat_operator(mu, x, margin=margin), system)
                count += 1
                if lhs != rhs:
                    mismatches.append({"x": x.to_json(), "mu": list(mu)})
    return not mismatches, {"instances": count, "k_lower_bound": k_lower_bound,
                            "mismatches": len(mismatches), "first": mismatches[:3]}


def cover_scan(system: RootSystem, samples: int, seed: int) -> tuple[bool, dict]:
    """Cover classification against the length-based cover test, and chamber preservation."""
    rng = random.Random(seed)
    bad = []
    kinds = {k: 0 for k in bo.COVER_KINDS}
    for _ in range(samples):
        x = bo.random_superregular(system, rng, slack=4)
        d = bo.decompose(x)
        for b in range(system.npos):
            alpha = system.roots[b]
            va = system.act_root(d.v, alpha)
            pa = system.pairing_index(b, d.lam)
            for n in list(range(pa - 2, pa + 3)) + list(range(-3, 4)):
                y = x * aw.affine_reflection(system, va, -n)
                kind = bo.classify_cover(x, alpha, n)
                ok = (kind != "none") == aw.is_cover(y, x)
                if kind != "none":
                    kinds[kind] += 1
                    ok = ok and y == bo.cover_closed_form(x, alpha, kind)
                    if kind.startswith("near"):
                        ok = ok and bo.chamber(y) == d.v
                if not ok:
                    bad.append({"x": x.to_json(), "alpha": list(alpha), "n": n})
    return not bad, {"kinds": kinds, "failures": bad[:5]}


def suite_prop42(cfg: RunConfig) -> list[dict]:
    sys = cfg.system
    ok, stats = prop42_samples(sys, cfg.trials, cfg.seed, cfg.margin, cfg.k_lower_bound)
    cov_ok, cov = cover_scan(sys, min(cfg.trials, 10), cfg.seed)
    return [check("prop42.beta_equals_bruhat", "beta operator matches the affine Bruhat operator", ok, stats),
            check("prop42.cover_classification", "superregular cover classification", cov_ok, cov)]


# -- quadratic relations ----------------------------------------------------------------------


def suite_prop51(cfg: RunConfig) -> list[dict]:
    n = type_a_rank(cfg.system)
    if n is None:
        return [check("prop51", "quadratic relations", None, reason="type A only")]
    rep = quadratic.verify_prop51(n, cfg.trials, cfg.seed, cfg.k_lower_bound, cfg.margin)
    out = []
    groups: dict[str, list] = {}
    for e in rep["entries"]:
        groups.setdefault(e["relation"].split()[0], []).append(e)
    names = {"square": "square relation", "commute": "disjoint commutation",
             "cyclic": "cyclic three-term relation", "margin": "regularity margin"}
    for g, es in sorted(groups.items()):
        fails = [e for e in es if e["status"] == "fail"]
        skipped = all(e["status"] == "skipped" for e in es)
        out.append(check(f"prop51.{g}", names.get(g, g), None if skipped else not fails,
                         {"checked": len(es), "failures": [e["instance"] for e in fails[:3]]}))
    cases = rep["cases"]
    out.append(check("prop51.cases", "both square mechanisms occur",
                     cases["case-1"] > 0 and cases["case-2"] > 0, cases))
    deg2 = quadratic.degree_two_identities(n)
    out.append(check("prop51.degree_two", "degree-2 identities in the tensor model",
                     all(e["status"] == "pass" for e in deg2), {"checked": len(deg2)}))
    tc = quadratic.verify_t_commutation(n, min(cfg.trials, 10), cfg.seed, cfg.k_lower_bound)
    out.append(check("prop51.t_commutation", "translations commute with DD",
                     all(e["status"] == "pass" for e in tc), {"checked": len(tc)}))
    dk = quadratic.verify_dunkl(n, cfg.trials, cfg.seed, cfg.k_lower_bound)
    out.append(check("prop51.dunkl", "Dunkl-type sums commute",
                     all(e["status"] == "pass" for e in dk), {"checked": len(dk)}))
    return out


# -- nil-Hecke layer -------------------------------------------------------------------------


def suite_nilhecke(cfg: RunConfig) -> list[dict]:
    sys = cfg.system
    rng = random.Random(cfg.seed)
    out = []
    rel = nh.verify_nilcoxeter_relations(sys)
    out.append(check("nilhecke.relations", "nil-Coxeter presentation",
                     all(e["status"] != "fail" for e in rel), rel))

    max_len = cfg.max_length or _default_length(sys)
    elems = [x for x in aw.bfs_oracle(sys, min(max_len, 4))]
    # representation law: tau_x tau_y acts as the composite
    bad = 0
    for _ in range(cfg.trials):
        x, y = rng.choice(elems), rng.choice(elems)
        f = poly.random_polynomial(rng, sys.rank, 5, 4)
        a, b = nh.NilCoxeterElement.tau(sys, x), nh.NilCoxeterElement.tau(sys, y)
        if nh.act_on_poly(a * b, f) != nh.act_on_poly(a, nh.act_on_poly(b, f)):
            bad += 1
    out.append(check("nilhecke.representation", "divided-difference representation", bad == 0,
                     {"trials": cfg.trials, "failures": bad}))

    # cross relation and phi compatibility
    bad_cross = bad_phi = 0
    for _ in range(cfg.trials):
        i = rng.randrange(sys.rank + 1)
        f = poly.random_polynomial(rng, sys.rank, 4, 3)
        g = poly.random_polynomial(rng, sys.rank, 3, 3)
        ti = nh.NilHeckeElement.tau(sys, i)
        prod = ti * f
        if nh.act_on_poly(prod, g) != nh.act_on_poly(ti, f * g):
            bad_cross += 1
        if nc.phi(prod) != nc.phi(ti) * f:
            bad_phi += 1
    out.append(check("nilhecke.cross_relation", "nil-Hecke cross relation", bad_cross == 0,
                     {"trials": cfg.trials, "failures": bad_cross}))
    out.append(check("nilhecke.phi_cross", "phi respects the cross relation", bad_phi == 0,
                     {"trials": cfg.trials, "failures": bad_phi}))

    images = generator_relation_images(sys)
    ok = all(nc.is_zero_in_B(t) for _n, t in images if max(t.degrees()) <= nc.SYMMETRIZER_CAP)
    out.append(check("nilhecke.phi_relations", "phi kills the nil-Coxeter relations", ok,
                     {"relations": [n for n, _ in images]}))

    # multiplicativity on sampled pairs of basis elements
    short = [x for x in elems if aw.length(x) <= 3]
    bad_mult = 0
    for _ in range(min(cfg.trials, 15)):
        x, y = rng.choice(short), rng.choice(short)
        lhs = nc.phi_tau(x) * nc.phi_tau(y)
        prod = nh.NilCoxeterElement.tau(sys, x) * nh.NilCoxeterElement.tau(sys, y)
        rhs = TensorElement(sys)
        for z, c in prod.terms.items():
            rhs = rhs + nc.phi_tau(z) * c
        if not nc.equal_in_B(lhs, rhs):
            bad_mult += 1
    out.append(check("nilhecke.phi_multiplicative", "phi is multiplicative", bad_mult == 0,
                     {"failures": bad_mult}))

    nonzero_len = max_len
    all_elems = aw.bfs_oracle(sys, nonzero_len)
    zeros = [aw.reduced_word(x) for x in all_elems if nc.is_zero_in_B(nc.phi_tau(x))]
    out.append(check("nilhecke.phi_injective", "phi(tau_x) is nonzero", not zeros,
                     {"elements": len(all_elems), "max_length": nonzero_len, "zero": zeros[:10]}))

    n = sys.rank
    w = nh.NilHeckeElement.polynomial(sys, poly.random_polynomial(rng, n, 3, 3) + 1)
    taus = [nh.centralizer_test(nh.NilHeckeElement.tau(sys, i)) for i in range(n + 1)]
    out.append(check("nilhecke.centralizer", "centralizer of S", nh.centralizer_test(w) and not any(taus),
                     {"polynomial": True, "tau": taus}))
    return out


# -- polynomial layer ----------------------------------------------------------------------


def symmetrize_polynomial(system: RootSystem, f: poly.Polynomial) -> poly.Polynomial:
    return poly.sum_polys(system.rank, (poly.weyl_act(system, w, f) for w in system.elements()))


def polynomial_properties(system: RootSystem, trials: int, seed: int, max_degree: int = 5) -> dict[str, int]:
    """Counts of failures of each divided-difference property on random polynomials."""
    rng = random.Random(seed)
    fails = {"nilpotent": 0, "braid": 0, "leibniz": 0, "invariant": 0, "degree": 0}
    r = system.rank
    dd = poly.simple_divided_difference
    pairs = [(i, j, aw.coxeter_exponent(system, i, j)) for i, j in itertools.combinations(range(r + 1), 2)]
    for t in range(trials):
        f = poly.random_polynomial(rng, r, max_degree, 4)
        g = poly.random_polynomial(rng, r, max_degree, 3)
        for b in range(system.npos):
            d = poly.divided_difference(system, b, f)
            if not poly.divided_difference(system, b, d).is_zero():
                fails["nilpotent"] += 1
            if not d.is_zero() and d.degree > f.degree - 1:
                fails["degree"] += 1
            lhs = poly.divided_difference(system, b, f * g)
            rhs = d * g + poly.reflect_polynomial(system, b, f) * poly.divided_difference(system, b, g)
            if lhs != rhs:
                fails["leibniz"] += 1
        for i, j, m in pairs:
            if m is None:
                continue
            a, c = f, f
            for s in range(m):
                a = dd(system, i if s % 2 == 0 else j, a)
                c = dd(system, j if s % 2 == 0 else i, c)
            if a != c:
                fails["braid"] += 1
        if t < 10:
            inv = symmetrize_polynomial(system, poly.random_polynomial(rng, r, 3, 2))
            if any(not poly.divided_difference(system, b, inv).is_zero() for b in range(system.npos)):
                fails["invariant"] += 1
    return fails


def suite_poly(cfg: RunConfig) -> list[dict]:
    fails = polynomial_properties(cfg.system, cfg.trials, cfg.seed)
    refs = {"nilpotent": "divided differences square to zero", "braid": "divided-difference braid relations",
            "leibniz": "twisted Leibniz rule", "invariant": "invariants are annihilated",
            "degree": "divided differences lower degree"}
    return [check(f"poly.{k}", refs[k], v == 0, {"trials": cfg.trials, "failures": v})
            for k, v in fails.items()]


RUNNERS = {
    "coxeter": suite_coxeter,
    "lemma31": suite_lemma31,
    "lemma41": suite_lemma41,
    "prop42": suite_prop42,
    "prop51": suite_prop51,
    "nilhecke": suite_nilhecke,
    "poly": suite_poly,
}


def run(cfg: RunConfig) -> list[dict]:
    checks = []
    for s in cfg.suites:
        checks.extend(RUNNERS[s](cfg))
    return sorted(checks, key=lambda c: c["id"])
