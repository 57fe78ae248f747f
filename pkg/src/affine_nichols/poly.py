"""Exact polynomials in the fundamental weights, Weyl actions and divided differences.

Variables are ``w1..wr`` (the fundamental weights).  The finite Weyl group
acts linearly; an affine element ``w t_lam`` acts either at level zero
(through ``w`` only, the action used by the nil-Hecke cross relation) or
through the Euclidean action on affine-linear functions, where a linear
form ``mu`` goes to ``w(mu) - <mu, lam>``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .roots import RootSystem, WeylElement

Monomial = tuple[int, ...]


class Polynomial:
    """A polynomial with rational coefficients in ``nvars`` variables."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Fraction | int] | None = None):
        self.nvars = nvars
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[tuple(m)] = Fraction(c)
        self.terms: dict[Monomial, Fraction] = clean
        self._hash = None

    # -- constructors -----------------------------------------------------------

    @classmethod
    def constant(cls, nvars: int, c) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        """The variable ``w{i+1}`` (0-based index)."""
        return cls(nvars, {tuple(int(j == i) for j in range(nvars)): 1})

    @classmethod
    def linear(cls, coeffs: Sequence, const=0) -> "Polynomial":
        n = len(coeffs)
        terms = {tuple(int(j == i) for j in range(n)): c for i, c in enumerate(coeffs)}
        terms[(0,) * n] = const
        return cls(n, terms)

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "Polynomial":
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    # -- ring operations ----------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError("polynomials over different variable sets")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial(self.nvars)
            return Polynomial._raw(self.nvars, {m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._raw(self.nvars, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.nvars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    @property
    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial._raw(self.nvars, {m: c for m, c in self.terms.items() if sum(m) == d})

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Replace variable ``i`` by ``images[i]`` (a ring homomorphism)."""
        powers: list[dict[int, Polynomial]] = [{0: Polynomial.constant(self.nvars, 1)} for _ in images]

        def pw(i: int, e: int) -> Polynomial:
            cache = powers[i]
            if e not in cache:
                cache[e] = pw(i, e - 1) * images[i]
            return cache[e]

        out = Polynomial(self.nvars)
        for m, c in self.terms.items():
            term = Polynomial.constant(self.nvars, c)
            for i, e in enumerate(m):
                if e:
                    term = term * pw(i, e)
            out = out + term
        return out

    def divide_exact(self, divisor: "Polynomial") -> "Polynomial":
        """Exact division; raises ArithmeticError on a nonzero remainder."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead_m = max(divisor.terms)
        lead_c = divisor.terms[lead_m]
        rem = dict(self.terms)
        quot: dict[Monomial, Fraction] = {}
        while rem:
            m = max(rem)
            if any(a < b for a, b in zip(m, lead_m)):
                raise ArithmeticError("polynomial division left a nonzero remainder")
            qm = tuple(a - b for a, b in zip(m, lead_m))
            qc = rem[m] / lead_c
            quot[qm] = quot.get(qm, 0) + qc
            for dm, dc in divisor.terms.items():
                tm = tuple(a + b for a, b in zip(qm, dm))
                v = rem.get(tm, 0) - qc * dc
                if v:
                    rem[tm] = v
                else:
                    rem.pop(tm, None)
        return Polynomial._raw(self.nvars, {m: c for m, c in quot.items() if c})

    # -- printing -------------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: _key(t[0]))

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r})"

    def to_json(self) -> dict:
        return {"nvars": self.nvars,
                "terms": [{"exp": list(m), "coeff": str(c)} for m, c in self.sorted_terms()]}


def _key(m: Monomial):
    return (-sum(m), tuple(-e for e in reversed(m)))


def format_polynomial(p: Polynomial, var: str = "w") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for m, c in sorted(p.terms.items(), key=lambda t: _key(t[0])):
        mono = "*".join(f"{var}{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e)
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{mag}*{mono}"
        else:
            body = str(mag)
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def polynomial_from_json(data: dict) -> Polynomial:
    return Polynomial(data["nvars"], {tuple(t["exp"]): Fraction(t["coeff"]) for t in data["terms"]})


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([a-zA-Z]+)(\d+)|(\^)|([-+*()]))")


def parse_polynomial(text: str, nvars: int, var: str = "w") -> Polynomial:
    """Parse the canonical string form, e.g. ``"3/2*w1^2*w2 - w3"``."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at position {pos}: {text[pos:]!r}")
        tokens.append((m.group(0).strip(), m.start()))
        pos = m.end()

    idx = 0

    def peek():
        return tokens[idx][0] if idx < len(tokens) else None

    def take():
        nonlocal idx
        tok = tokens[idx][0]
        idx += 1
        return tok

    def expr():
        sign = 1
        if peek() in ("+", "-"):
            sign = -1 if take() == "-" else 1
        acc = term() * sign
        while peek() in ("+", "-"):
            op = take()
            t = term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term():
        acc = power()
        while peek() == "*":
            take()
            acc = acc * power()
        return acc

    def power():
        base = atom()
        if peek() == "^":
            take()
            e = take()
            if not e.isdigit():
                raise ValueError(f"bad exponent {e!r}")
            base = base ** int(e)
        return base

    def atom():
        tok = peek()
        if tok is None:
            raise ValueError("unexpected end of polynomial")
        if tok == "(":
            take()
            val = expr()
            if take() != ")":
                raise ValueError("unbalanced parentheses")
            return val
        take()
        if tok[0].isdigit():
            return Polynomial.constant(nvars, Fraction(tok))
        name = re.match(r"([a-zA-Z]+)(\d+)", tok)
        if not name or name.group(1) != var:
            raise ValueError(f"unknown symbol {tok!r}")
        i = int(name.group(2))
        if not 1 <= i <= nvars:
            raise ValueError(f"variable {tok} out of range")
        return Polynomial.variable(nvars, i - 1)

    result = expr()
    if idx != len(tokens):
        raise ValueError(f"trailing input at position {tokens[idx][1]}")
    return result


# -- Weyl group action ------------------------------------------------------------


def weight_polynomial(system: RootSystem, mu: Sequence) -> Polynomial:
    """The linear form ``mu`` given in fundamental-weight coordinates."""
    return Polynomial.linear(list(mu))


def root_polynomial(system: RootSystem, root: Sequence[int]) -> Polynomial:
    """The root ``alpha`` as a linear form in the fundamental weights."""
    return Polynomial.linear(list(system.root_to_weight(root)))


def _linear_images(system: RootSystem, w: WeylElement, lam: Sequence[int] | None) -> list[Polynomial]:
    r = system.rank
    images = []
    for j in range(r):
        unit = tuple(int(i == j) for i in range(r))
        img = system.act_weight(w, unit)
        const = -lam[j] if lam is not None else 0
        images.append(Polynomial.linear(list(img), const))
    return images


def weyl_act(system: RootSystem, g, f: Polynomial, affine: bool = False) -> Polynomial:
    """Apply a finite or affine Weyl element to ``f``.

    For an affine element the level-zero action (finite part only) is used
    unless ``affine`` is true, in which case the translation part shifts
    linear forms by constants.
    """
    if isinstance(g, WeylElement):
        w, lam = g, None
    else:
        w, lam = g.w, (g.lam if affine else None)
    if w == system.identity and not (lam and any(lam)):
        return f
    return f.substitute(_linear_images(system, w, lam))


def reflect_polynomial(system: RootSystem, root: Sequence[int] | int, f: Polynomial) -> Polynomial:
    return weyl_act(system, system.reflection(root), f)


def divided_difference(system: RootSystem, root: Sequence[int] | int, f: Polynomial) -> Polynomial:
    """``(f - s_alpha f) / alpha`` for a root alpha (positive or negative)."""
    if f.is_constant():
        return Polynomial(system.rank)
    idx = root if isinstance(root, int) else system.index(root)
    num = f - reflect_polynomial(system, idx, f)
    if num.is_zero():
        return num
    return num.divide_exact(root_polynomial(system, system.roots[idx]))


def simple_divided_difference(system: RootSystem, i: int, f: Polynomial) -> Polynomial:
    """``tau_i`` acting on S: ``d_{alpha_i}`` for i >= 1, ``d_{alpha_0} = -d_theta`` for i = 0."""
    if i == 0:
        return -divided_difference(system, system.highest_root, f)
    return divided_difference(system, system.simple_indices[i - 1], f)


def random_polynomial(rng, nvars: int, max_degree: int = 5, n_terms: int = 4,
                      coeff_range: int = 5) -> Polynomial:
    terms = {}
    for _ in range(n_terms):
        d = rng.randint(0, max_degree)
        m = [0] * nvars
        for _ in range(d):
            m[rng.randrange(nvars)] += 1
        terms[tuple(m)] = Fraction(rng.randint(-coeff_range, coeff_range), rng.randint(1, 3))
    return Polynomial(nvars, terms)


def variables(system: RootSystem) -> list[Polynomial]:
    return [Polynomial.variable(system.rank, i) for i in range(system.rank)]


def zero(system: RootSystem) -> Polynomial:
    return Polynomial(system.rank)


def one(system: RootSystem) -> Polynomial:
    return Polynomial.constant(system.rank, 1)


def sum_polys(nvars: int, polys: Iterable[Polynomial]) -> Polynomial:
    out = Polynomial(nvars)
    for p in polys:
        out = out + p
    return out
