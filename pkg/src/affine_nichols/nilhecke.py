"""The affine nil-Coxeter algebra ``A_0`` and the nil-Hecke algebra ``A_0 ⋉ S``.

``A_0`` is modelled on its basis ``tau_x``: ``tau_x tau_y = tau_{xy}`` when
lengths add and 0 otherwise.  The defining presentation (quadratic and braid
relations) is checked as a property by :func:`verify_nilcoxeter_relations`.
Nil-Hecke elements are kept in the normal form ``sum f_x tau_x``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Mapping

from . import affine_weyl as aw
from .affine_weyl import AffineWeylElement
from .poly import Polynomial, format_polynomial, parse_polynomial, simple_divided_difference, weyl_act
from .roots import RootSystem


class NilCoxeterElement:
    __slots__ = ("system", "terms")

    def __init__(self, system: RootSystem, terms: Mapping[AffineWeylElement, Fraction | int] | None = None):
        self.system = system
        self.terms: dict[AffineWeylElement, Fraction] = {
            x: Fraction(c) for x, c in (terms or {}).items() if c}

    @classmethod
    def tau(cls, system: RootSystem, x: AffineWeylElement | int) -> "NilCoxeterElement":
        if isinstance(x, int):
            x = aw.simple_affine_reflection(system, x)
        return cls(system, {x: 1})

    def __add__(self, other: "NilCoxeterElement") -> "NilCoxeterElement":
        out = dict(self.terms)
        for x, c in other.terms.items():
            out[x] = out.get(x, 0) + c
        return NilCoxeterElement(self.system, out)

    def __neg__(self):
        return NilCoxeterElement(self.system, {x: -c for x, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, NilCoxeterElement):
            return nc_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return NilCoxeterElement(self.system, {x: c * other for x, c in self.terms.items()})
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, NilCoxeterElement):
            return NotImplemented
        return self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        return f"NilCoxeterElement({self.to_nilhecke()})"

    def to_nilhecke(self) -> "NilHeckeElement":
        n = self.system.rank
        return NilHeckeElement(self.system, {x: Polynomial.constant(n, c) for x, c in self.terms.items()})


def nc_mul(a: NilCoxeterElement, b: NilCoxeterElement) -> NilCoxeterElement:
    out: dict[AffineWeylElement, Fraction] = {}
    for x, c in a.terms.items():
        lx = aw.length(x)
        for y, d in b.terms.items():
            xy = x * y
            if aw.length(xy) == lx + aw.length(y):
                out[xy] = out.get(xy, 0) + c * d
    return NilCoxeterElement(a.system, out)


def _power_word(i: int, j: int, m: int) -> list[int]:
    # (t_i t_j)^{[m/2]} t_i^{nu}, i.e. the alternating word of length m starting with i
    return [i if t % 2 == 0 else j for t in range(m)]


def verify_nilcoxeter_relations(system: RootSystem) -> list[dict]:
    """Check every defining relation of the affine nil-Coxeter algebra in the basis model."""
    gens = [NilCoxeterElement.tau(system, i) for i in range(system.rank + 1)]

    def product(word):
        out = NilCoxeterElement(system, {aw.identity(system): 1})
        for i in word:
            out = out * gens[i]
        return out

    report = []
    for i in range(system.rank + 1):
        ok = (gens[i] * gens[i]).is_zero()
        report.append({"relation": f"tau{i}^2 = 0", "status": "pass" if ok else "fail"})
    for i in range(system.rank + 1):
        for j in range(i + 1, system.rank + 1):
            m = aw.coxeter_exponent(system, i, j)
            if m is None:
                report.append({"relation": f"braid({i},{j})", "status": "skipped",
                               "reason": "m_ij is infinite"})
                continue
            lhs, rhs = product(_power_word(i, j, m)), product(_power_word(j, i, m))
            ok = lhs == rhs and not lhs.is_zero()
            report.append({"relation": f"braid({i},{j}) m={m}", "status": "pass" if ok else "fail"})
    return report


class NilHeckeElement:
    """``sum f_x tau_x`` with polynomial coefficients on the left."""

    __slots__ = ("system", "terms")

    def __init__(self, system: RootSystem, terms: Mapping[AffineWeylElement, Polynomial] | None = None):
        self.system = system
        self.terms: dict[AffineWeylElement, Polynomial] = {
            x: f for x, f in (terms or {}).items() if not f.is_zero()}

    @classmethod
    def tau(cls, system: RootSystem, x: AffineWeylElement | int) -> "NilHeckeElement":
        return NilCoxeterElement.tau(system, x).to_nilhecke()

    @classmethod
    def polynomial(cls, system: RootSystem, f: Polynomial) -> "NilHeckeElement":
        return cls(system, {aw.identity(system): f})

    def __add__(self, other):
        other = _as_nh(self.system, other)
        out = dict(self.terms)
        for x, f in other.terms.items():
            out[x] = out[x] + f if x in out else f
        return NilHeckeElement(self.system, out)

    __radd__ = __add__

    def __neg__(self):
        return NilHeckeElement(self.system, {x: -f for x, f in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_nh(self.system, other))

    def __rsub__(self, other):
        return _as_nh(self.system, other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NilHeckeElement(self.system, {x: f * other for x, f in self.terms.items()})
        return nh_mul(self, _as_nh(self.system, other))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return nh_mul(_as_nh(self.system, other), self)

    def __eq__(self, other):
        try:
            other = _as_nh(self.system, other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        return format_nilhecke(self)

    def __repr__(self) -> str:
        return f"NilHeckeElement({format_nilhecke(self)!r})"

    def to_json(self) -> list[dict]:
        return [{"x": x.to_json(), "coeff": str(f)} for x, f in _sorted_items(self)]


def _as_nh(system: RootSystem, x) -> NilHeckeElement:
    if isinstance(x, NilHeckeElement):
        return x
    if isinstance(x, NilCoxeterElement):
        return x.to_nilhecke()
    if isinstance(x, Polynomial):
        return NilHeckeElement.polynomial(system, x)
    if isinstance(x, (int, Fraction)):
        return NilHeckeElement.polynomial(system, Polynomial.constant(system.rank, x))
    raise TypeError(f"cannot interpret {type(x).__name__} as a nil-Hecke element")


def _sorted_items(a: NilHeckeElement):
    return sorted(a.terms.items(), key=lambda t: (aw.length(t[0]), aw.reduced_word(t[0])))


def format_nilhecke(a: NilHeckeElement) -> str:
    if a.is_zero():
        return "0"
    parts = []
    for x, f in _sorted_items(a):
        word = aw.reduced_word(x)
        coeff = format_polynomial(f)
        if not word:
            parts.append(coeff)
            continue
        tau = "*".join(f"tau{i}" for i in word)
        if coeff == "1":
            parts.append(tau)
        elif coeff == "-1":
            parts.append("-" + tau)
        elif len(f.terms) == 1:
            parts.append(f"{coeff}*{tau}")
        else:
            parts.append(f"({coeff})*{tau}")
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def nilhecke_from_json(system: RootSystem, data: list[dict]) -> NilHeckeElement:
    terms = {}
    for item in data:
        x = aw.from_json(system, item["x"])
        terms[x] = terms.get(x, Polynomial(system.rank)) + parse_polynomial(item["coeff"], system.rank)
    return NilHeckeElement(system, terms)


def push_through(x: AffineWeylElement, g: Polynomial) -> dict[AffineWeylElement, Polynomial]:
    """Rewrite ``tau_x g`` as ``sum h_z tau_z`` using ``tau_i f = d_i(f) + s_i(f) tau_i``."""
    sys = x.system
    word = aw.reduced_word(x)
    # terms: z -> h with tau_{suffix} g = sum h tau_z, built from the right end of the word
    state: dict[AffineWeylElement, Polynomial] = {aw.identity(sys): g}
    for i in reversed(word):
        s_i = aw.simple_affine_reflection(sys, i)
        nxt: dict[AffineWeylElement, Polynomial] = {}
        for z, h in state.items():
            d = simple_divided_difference(sys, i, h)
            if not d.is_zero():
                nxt[z] = nxt[z] + d if z in nxt else d
            sz = s_i * z
            if aw.length(sz) == aw.length(z) + 1:
                sh = weyl_act(sys, s_i, h)
                nxt[sz] = nxt[sz] + sh if sz in nxt else sh
        state = {z: h for z, h in nxt.items() if not h.is_zero()}
    return state


def nh_mul(a: NilHeckeElement, b: NilHeckeElement) -> NilHeckeElement:
    sys = a.system
    out: dict[AffineWeylElement, Polynomial] = {}
    for x, f in a.terms.items():
        for y, g in b.terms.items():
            ly = aw.length(y)
            for z, h in push_through(x, g).items():
                zy = z * y
                if aw.length(zy) != aw.length(z) + ly:
                    continue
                term = f * h
                out[zy] = out[zy] + term if zy in out else term
    return NilHeckeElement(sys, out)


def act_on_poly(a, f: Polynomial) -> Polynomial:
    """Divided-difference representation: ``tau_i -> d_{alpha_i}``, ``tau_0 -> -d_theta``."""
    if isinstance(a, NilCoxeterElement):
        a = a.to_nilhecke()
    sys = a.system
    out = Polynomial(sys.rank)
    for x, coeff in a.terms.items():
        g = f
        for i in reversed(aw.reduced_word(x)):
            g = simple_divided_difference(sys, i, g)
            if g.is_zero():
                break
        out = out + coeff * g
    return out


def centralizer_test(a: NilHeckeElement) -> bool:
    """Whether ``a`` commutes with each fundamental weight, hence with all of S."""
    sys = a.system
    for i in range(sys.rank):
        w = NilHeckeElement.polynomial(sys, Polynomial.variable(sys.rank, i))
        if nh_mul(a, w) != nh_mul(w, a):
            return False
    return True


def dumps(a: NilHeckeElement) -> str:
    return json.dumps(a.to_json(), sort_keys=True)
