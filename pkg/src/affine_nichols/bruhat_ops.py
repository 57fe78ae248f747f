"""Superregular elements, Bruhat covers and the affine Bruhat operators.

Everything here lives in the combinatorial model: a basis symbol ``<x>`` for
each superregular ``x`` and the contraction rule

    <x> D_{[alpha,k]} = <x s_{alpha,k}>   if l(x s_{alpha,k}) = l(x) - 1,  else 0   (k > 0).

In the tensor model the symbol is ``<x> = (-1)^{l(x)} [x]``
(:func:`tensor_representative`).  With that normalization the rule above
is exactly what the braided differentials do to the alcove-path words, which
``tests/test_bruhat_ops.py`` checks at small length.

Pairings ``<lam, alpha>`` are root against coroot-lattice vector, and
the finite part of ``x = w t_{v lam}`` is ``w``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from . import affine_weyl as aw
from .affine_weyl import AffineWeylElement
from .alcove import bracket
from .nichols import TensorElement
from .poly import Polynomial, format_polynomial, parse_polynomial, weight_polynomial
from .roots import CorootVector, Root, RootSystem, WeylElement


class ChamberUndefined(ValueError):
    """The translation part pairs to zero with some root."""


class MarginExhausted(RuntimeError):
    """An operator produced an index too close to the superregular boundary."""


@dataclass(frozen=True)
class ChamberDecomposition:
    w: WeylElement
    v: WeylElement
    lam: CorootVector
    system: RootSystem

    def recompose(self) -> AffineWeylElement:
        return aw.element(self.system, self.w, self.system.act_coroot(self.v, self.lam))


def superregular_threshold(system: RootSystem) -> int:
    return 2 * system.weyl_order + 2


def _is_antidominant(system: RootSystem, lam: Sequence[int]) -> bool:
    return all(system.pairing_index(s, lam) <= 0 for s in system.simple_indices)


def decompose(x: AffineWeylElement) -> ChamberDecomposition:
    """Write ``x = w t_{v lam}`` with ``lam`` antidominant and regular."""
    sys = x.system
    if any(sys.pairing_index(b, x.lam) == 0 for b in range(sys.npos)):
        raise ChamberUndefined("chamber undefined: translation part is not regular")
    # v^{-1} sends x.lam to the antidominant chamber; v^{-1} has descent at i
    # whenever <alpha_i, current> > 0
    cur = x.lam
    v = sys.identity
    while True:
        for i, s in enumerate(sys.simple_indices):
            if sys.pairing_index(s, cur) > 0:
                refl = sys.simple_reflections[i]
                cur = sys.act_coroot(refl, cur)
                v = v * refl
                break
        else:
            break
    return ChamberDecomposition(x.w, v, cur, sys)


def chamber(x: AffineWeylElement) -> WeylElement:
    return decompose(x).v


def regularity_slack(x: AffineWeylElement) -> int:
    """``min |<lam, alpha>| - (2|W| + 2)``; positive exactly when ``x`` is superregular."""
    d = decompose(x)
    sys = x.system
    return min(abs(sys.pairing_index(b, d.lam)) for b in range(sys.npos)) - superregular_threshold(sys)


def is_superregular(x: AffineWeylElement) -> bool:
    try:
        return regularity_slack(x) > 0
    except ChamberUndefined:
        return False


def _check_margin(y: AffineWeylElement, margin: int) -> None:
    try:
        slack = regularity_slack(y)
    except ChamberUndefined:
        slack = None
    if slack is None or slack <= margin:
        raise MarginExhausted(f"regularity margin exhausted at {y!r} (slack {slack}, margin {margin})")


def superregular_antidominant(system: RootSystem, rng, slack: int = 1, spread: int = 12) -> CorootVector:
    """Random antidominant coroot-lattice vector with every ``|<lam, alpha_i>| >= threshold + slack``."""
    r = system.rank
    lo = superregular_threshold(system) + slack
    # solve <alpha_i, lam> = -d_i for lam in simple-coroot coordinates
    while True:
        d = [-(lo + rng.randrange(spread)) for _ in range(r)]
        lam = _solve(system, d)
        if lam is not None:
            return lam


def _solve(system: RootSystem, target: Sequence[int]) -> CorootVector | None:
    r = system.rank
    # rows: <alpha_i, lam> = sum_j cartan[j][i] lam_j
    m = [[Fraction(system.cartan[j][i]) for j in range(r)] + [Fraction(target[i])] for i in range(r)]
    for c in range(r):
        p = next(k for k in range(c, r) if m[k][c] != 0)
        m[c], m[p] = m[p], m[c]
        for k in range(r):
            if k != c and m[k][c]:
                f = m[k][c] / m[c][c]
                m[k] = [a - f * b for a, b in zip(m[k], m[c])]
    sol = [m[i][r] / m[i][i] for i in range(r)]
    if any(s.denominator != 1 for s in sol):
        return None
    return tuple(int(s) for s in sol)


def random_superregular(system: RootSystem, rng, v: WeylElement | None = None,
                        w: WeylElement | None = None, slack: int = 1) -> AffineWeylElement:
    elems = system.elements()
    v = rng.choice(elems) if v is None else v
    w = rng.choice(elems) if w is None else w
    lam = superregular_antidominant(system, rng, slack)
    return aw.element(system, w, system.act_coroot(v, lam))


# -- the module of basis symbols ----------------------------------------------------------


class RegularModuleElement:
    """``sum f_x <x>`` over superregular ``x``; all indices must be superregular."""

    __slots__ = ("system", "terms")

    def __init__(self, system: RootSystem, terms: Mapping[AffineWeylElement, Polynomial] | None = None):
        self.system = system
        self.terms: dict[AffineWeylElement, Polynomial] = {}
        for x, f in (terms or {}).items():
            if isinstance(f, (int, Fraction)):
                f = Polynomial.constant(system.rank, f)
            if f.is_zero():
                continue
            if not is_superregular(x):
                raise MarginExhausted(f"index {x!r} is not superregular")
            self.terms[x] = f

    @classmethod
    def basis(cls, x: AffineWeylElement, coeff=1) -> "RegularModuleElement":
        return cls(x.system, {x: Polynomial.constant(x.system.rank, coeff)
                              if isinstance(coeff, (int, Fraction)) else coeff})

    @property
    def chamber(self) -> WeylElement | None:
        """The common chamber of all indices, or None when empty or mixed."""
        vs = {chamber(x) for x in self.terms}
        return vs.pop() if len(vs) == 1 else None

    def __add__(self, other: "RegularModuleElement") -> "RegularModuleElement":
        out = dict(self.terms)
        for x, f in other.terms.items():
            out[x] = out[x] + f if x in out else f
        return _trusted(self.system, out)

    def __neg__(self):
        return _trusted(self.system, {x: -f for x, f in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, f: Polynomial | int | Fraction) -> "RegularModuleElement":
        return _trusted(self.system, {x: g * f for x, g in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, RegularModuleElement):
            return NotImplemented
        return self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def non_equivariant(self) -> "RegularModuleElement":
        """Set every equivariant parameter to zero: keep constant terms only."""
        n = self.system.rank
        return _trusted(self.system, {x: Polynomial.constant(n, f.constant_term())
                                      for x, f in self.terms.items()})

    def to_json(self) -> dict:
        v = self.chamber
        return {
            "chamber": None if v is None else self.system.weyl_word(v),
            "terms": {json.dumps(x.to_json(), sort_keys=True): str(f)
                      for x, f in sorted(self.terms.items(), key=lambda t: _sort_key(t[0]))},
        }

    def __repr__(self):
        if not self.terms:
            return "RegularModuleElement(0)"
        parts = [f"({format_polynomial(f)})<{x.to_json()}>" for x, f in
                 sorted(self.terms.items(), key=lambda t: _sort_key(t[0]))]
        return "RegularModuleElement(" + " + ".join(parts) + ")"


def _sort_key(x: AffineWeylElement):
    return (x.system.weyl_word(x.w), x.lam)


def _trusted(system, terms) -> RegularModuleElement:
    out = RegularModuleElement(system)
    out.terms = {x: f for x, f in terms.items() if not f.is_zero()}
    return out


def regular_module_from_json(system: RootSystem, data: dict) -> RegularModuleElement:
    terms = {aw.from_json(system, json.loads(k)): parse_polynomial(c, system.rank)
             for k, c in data["terms"].items()}
    return RegularModuleElement(system, terms)


# -- contraction rule -----------------------------------------------------------------------


def lemma41_rule(x: AffineWeylElement, root: Sequence[int], k: int) -> AffineWeylElement | None:
    """``x s_{root,k}`` when the length drops by exactly one, else None.  Requires ``k > 0``."""
    if k <= 0:
        raise ValueError("the contraction rule needs a positive level")
    # elements compare without their system, so the cache lives on the system
    cache = x.system.__dict__.setdefault("_contraction_cache", {})
    key = (x, tuple(root), k)
    if key in cache:
        return cache[key]
    lx = cache.get(x)
    if lx is None:
        lx = cache[x] = aw.length(x)
    y = x * aw.affine_reflection(x.system, root, k)
    out = y if aw.length(y) == lx - 1 else None
    if len(cache) < 1 << 18:
        cache[key] = out
    return out


def lemma41_action(m: RegularModuleElement, root: Sequence[int], k: int, margin: int = 0) -> RegularModuleElement:
    """``m D_{[root,k]}``, coefficients carried through untwisted."""
    root = tuple(root)
    out: dict[AffineWeylElement, Polynomial] = {}
    for x, f in m.terms.items():
        y = lemma41_rule(x, root, k)
        if y is None:
            continue
        _check_margin(y, margin)
        out[y] = out[y] + f if y in out else f
    return _trusted(m.system, out)


def contraction_levels(x: AffineWeylElement, root: Sequence[int], k_lower_bound: int = 2) -> range:
    """Levels ``k >= k_lower_bound`` at which ``{<root,p> = k}`` can separate the two alcoves.

    A separating wall has ``|k| <= |<root, lam>| + 1`` where ``lam`` is the translation part.
    """
    sys = x.system
    bound = abs(sys.pairing_index(sys.index(root), x.lam)) + 1
    return range(max(k_lower_bound, 1), bound + 1)


def tensor_representative(x: AffineWeylElement) -> TensorElement:
    """The element ``<x> = (-1)^{l(x)} [x]`` of the tensor model."""
    t = bracket(x)
    return t if aw.length(x) % 2 == 0 else -t


# -- cover classification -----------------------------------------------------------------


COVER_KINDS = ("near-1", "near-2", "far-3", "far-4")


def classify_cover(x: AffineWeylElement, alpha: Sequence[int], n: int) -> str:
    """Which cover condition ``y = x s_{v(alpha), -n} -> x`` satisfies, or ``"none"``.

    Uses finite Weyl lengths only; independent of the affine length function.
    """
    sys = x.system
    d = decompose(x)
    b = sys.index(alpha)
    if not sys.is_positive(b):
        raise ValueError("classify_cover expects a positive root")
    sa = sys.reflection(b)
    pa = sys.pairing_index(b, d.lam)
    h2 = sys.two_rho_pairing(b)
    lw = sys.weyl_length
    wv = d.w * d.v
    if n == pa and lw(wv) == lw(wv * sa) - 1:
        return "near-1"
    if n == pa + 1 and lw(wv) == lw(wv * sa) + h2 - 1:
        return "near-2"
    if n == 0 and lw(d.v) == lw(d.v * sa) + 1:
        return "far-3"
    if n == -1 and lw(d.v) == lw(d.v * sa) - h2 + 1:
        return "far-4"
    return "none"


def cover_closed_form(x: AffineWeylElement, alpha: Sequence[int], kind: str) -> AffineWeylElement:
    """The lower element ``y`` predicted by each cover condition."""
    sys = x.system
    d = decompose(x)
    b = sys.index(alpha)
    sva = sys.reflection(sys.act_root(d.v, alpha))
    cor = sys.coroot(b)
    if kind == "near-1":
        lam = sys.act_coroot(d.v, d.lam)
    elif kind == "near-2":
        lam = sys.act_coroot(d.v, tuple(a + c for a, c in zip(d.lam, cor)))
    elif kind == "far-3":
        lam = sys.act_coroot(d.v * sys.reflection(b), d.lam)
    elif kind == "far-4":
        lam = sys.act_coroot(d.v * sys.reflection(b), tuple(a + c for a, c in zip(d.lam, cor)))
    else:
        raise ValueError(f"unknown cover kind {kind!r}")
    return aw.element(sys, d.w * sva, lam)


def near_covers(x: AffineWeylElement) -> list[tuple[Root, int, str, AffineWeylElement]]:
    """All ``(alpha, k, kind, y)`` with ``y = x s_{v(alpha),k}`` a near cover of ``x``."""
    sys = x.system
    d = decompose(x)
    out = []
    for b in range(sys.npos):
        alpha = sys.roots[b]
        pa = sys.pairing_index(b, d.lam)
        for n in (pa, pa + 1):
            kind = classify_cover(x, alpha, n)
            if kind in ("near-1", "near-2"):
                y = x * aw.affine_reflection(sys, sys.act_root(d.v, alpha), -n)
                out.append((alpha, -n, kind, y))
    return out


# -- affine Bruhat operators ---------------------------------------------------------------


def _weight_pair(system: RootSystem, mu: Sequence, b: int) -> Fraction:
    # <alpha^vee, mu> with mu in fundamental-weight coordinates
    return sum(Fraction(m) * c for m, c in zip(mu, system.coroot(b)))


def _shift_term(x: AffineWeylElement, mu: Sequence) -> Polynomial:
    sys = x.system
    d = decompose(x)
    return weight_polynomial(sys, mu) - weight_polynomial(sys, sys.act_weight(d.w * d.v, mu))


def affine_bruhat_operator(mu: Sequence, x: AffineWeylElement, margin: int = 0,
                           equivariant: bool = True) -> dict[AffineWeylElement, Polynomial]:
    """``B^mu(x)`` as a map from elements to coefficients, from the cover classification."""
    sys = x.system
    _check_margin(x, margin)
    n = sys.rank
    out: dict[AffineWeylElement, Polynomial] = {}
    if equivariant:
        shift = _shift_term(x, mu)
        if not shift.is_zero():
            out[x] = shift
    for alpha, _k, _kind, y in near_covers(x):
        c = _weight_pair(sys, mu, sys.index(alpha))
        if c:
            _check_margin(y, margin)
            out[y] = out.get(y, Polynomial(n)) + Polynomial.constant(n, c)
    return {y: f for y, f in out.items() if not f.is_zero()}


def iota(combination: Mapping[AffineWeylElement, Polynomial], system: RootSystem | None = None) -> RegularModuleElement:
    """``x -> <x>``, extended S-linearly."""
    if system is None:
        system = next(iter(combination)).system
    return RegularModuleElement(system, dict(combination))


def beta_op(mu: Sequence, m: RegularModuleElement, k_lower_bound: int = 2, margin: int = 0,
            equivariant: bool = True) -> RegularModuleElement:
    """``(mu - wv mu)<x> + <x> sum_{alpha>0, k>=k_lower_bound} <alpha^vee, mu> D_{[v(alpha),k]}``."""
    sys = m.system
    n = sys.rank
    out: dict[AffineWeylElement, Polynomial] = {}
    for x, f in m.terms.items():
        d = decompose(x)
        if equivariant:
            shift = _shift_term(x, mu)
            if not shift.is_zero():
                out[x] = out[x] + f * shift if x in out else f * shift
        for b in range(sys.npos):
            c = _weight_pair(sys, mu, b)
            if not c:
                continue
            va = sys.act_root(d.v, sys.roots[b])
            for k in contraction_levels(x, va, k_lower_bound):
                y = lemma41_rule(x, va, k)
                if y is None:
                    continue
                _check_margin(y, margin)
                term = f * Polynomial.constant(n, c)
                out[y] = out[y] + term if y in out else term
    return _trusted(sys, out)


def theta_map(w: WeylElement, lam: Sequence[int], mu: Sequence[int], v: WeylElement,
              system: RootSystem) -> AffineWeylElement:
    """``v w^{-1} t_{w(lam + mu)}``; ``lam`` and ``lam + mu`` must be superregular antidominant."""
    total = tuple(a + b for a, b in zip(lam, mu))
    for vec in (tuple(lam), total):
        if not _is_antidominant(system, vec) or regularity_slack(aw.translation(system, vec)) <= 0:
            raise MarginExhausted(f"{list(vec)} is not superregular antidominant")
    return aw.element(system, v * w.inverse(), system.act_coroot(w, total))
