"""Free-tensor representatives of the Nichols-Woronowicz algebra over ``W_af``.

Elements are rational combinations of words in canonical affine root labels.
Equality in the quotient is decided degree by degree: a homogeneous tensor is
zero in the Nichols algebra iff its Woronowicz symmetrizer vanishes.

Braiding, for ``a = [alpha, k]`` graded by ``s_{alpha,k}``::

    psi(a (x) b) = s_{alpha,k}(b) (x) a,
    s_{alpha,k}[beta, l] = [s_alpha(beta), l - <beta, alpha^vee> k].

Braided differentials act from the right and satisfy
``(F G) D_v = F (G D_v) + (F D_v) s_v(G)`` with ``(a) D_v = (a, v)``.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import affine_weyl as aw
from .affine_weyl import AffineRootLabel, AffineWeylElement
from .poly import Polynomial, divided_difference, reflect_polynomial
from .roots import RootSystem

Word = tuple[AffineRootLabel, ...]

SYMMETRIZER_CAP = 8


class SymmetrizerCapError(RuntimeError):
    """Raised when a symmetrizer of degree above the cap is requested."""


def label(system: RootSystem, root: Sequence[int], level: int = 0) -> AffineRootLabel:
    return AffineRootLabel.make(system, root, level)


def generator_label(system: RootSystem, i: int) -> AffineRootLabel:
    """``[alpha_i, 0]`` for i >= 1 and ``[alpha_0, -1] = -[theta, 1]`` for i = 0."""
    if i == 0:
        return AffineRootLabel(system.highest_root, 1, -1)
    return AffineRootLabel(system.roots[system.simple_indices[i - 1]], 0, 1)


def _caches(system: RootSystem) -> dict:
    c = getattr(system, "_nichols_caches", None)
    if c is None:
        c = {"reflect": {}, "sym": {}}
        system._nichols_caches = c
    return c


def reflect_label(system: RootSystem, a: AffineRootLabel, b: AffineRootLabel) -> AffineRootLabel:
    """``s_{a}(b)``: the grading of ``a`` acting on ``b`` (sign of ``a`` irrelevant)."""
    cache = _caches(system)["reflect"]
    key = (a.root, a.level, b.root, b.level)
    hit = cache.get(key)
    if hit is None:
        ai = system.index(a.root)
        bi = system.index(b.root)
        p = sum(x * y for x, y in zip(system.pairing_vector(bi), system.coroot(ai)))
        img = system.index(tuple(c - p * e for c, e in zip(b.root, a.root)))
        level = b.level - p * a.level
        if system.is_positive(img):
            hit = AffineRootLabel(system.roots[img], level, 1)
        else:
            hit = AffineRootLabel(system.roots[system.negate(img)], -level, -1)
        cache[key] = hit
    if b.sign == 1:
        return hit
    return AffineRootLabel(hit.root, hit.level, hit.sign * b.sign)


def inner_product(a: AffineRootLabel, b: AffineRootLabel) -> int:
    if a.root == b.root and a.level == b.level:
        return a.sign * b.sign
    return 0


class TensorElement:
    """A rational combination of words in canonical (unsigned) labels."""

    __slots__ = ("system", "terms")

    def __init__(self, system: RootSystem, terms: Mapping[Word, Fraction | int] | None = None):
        self.system = system
        self.terms: dict[Word, Fraction] = {}
        if terms:
            for w, c in terms.items():
                self._add_term(tuple(w), Fraction(c))

    def _add_term(self, word: Sequence[AffineRootLabel], coeff) -> None:
        sign = 1
        canon = []
        for a in word:
            if a.sign != 1:
                sign *= a.sign
                a = AffineRootLabel(a.root, a.level, 1)
            canon.append(a)
        key = tuple(canon)
        v = self.terms.get(key, 0) + sign * coeff
        if v:
            self.terms[key] = v
        else:
            self.terms.pop(key, None)

    @classmethod
    def scalar(cls, system: RootSystem, c=1) -> "TensorElement":
        return cls(system, {(): c})

    @classmethod
    def word(cls, system: RootSystem, letters: Iterable[AffineRootLabel], coeff=1) -> "TensorElement":
        t = cls(system)
        t._add_term(tuple(letters), Fraction(coeff))
        return t

    @classmethod
    def letter(cls, system: RootSystem, a: AffineRootLabel) -> "TensorElement":
        return cls.word(system, (a,))

    # -- linear structure and tensor product ----------------------------------------

    def copy(self) -> "TensorElement":
        t = TensorElement(self.system)
        t.terms = dict(self.terms)
        return t

    def __add__(self, other: "TensorElement") -> "TensorElement":
        out = self.copy()
        for w, c in other.terms.items():
            out._add_term(w, c)
        return out

    def __neg__(self) -> "TensorElement":
        out = TensorElement(self.system)
        out.terms = {w: -c for w, c in self.terms.items()}
        return out

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            out = TensorElement(self.system)
            if other:
                out.terms = {w: c * other for w, c in self.terms.items()}
            return out
        if isinstance(other, TensorElement):
            out = TensorElement(self.system)
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    out._add_term(w1 + w2, c1 * c2)
            return out
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TensorElement.scalar(self.system, other) if other else TensorElement(self.system)
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> list[int]:
        return sorted({len(w) for w in self.terms})

    def component(self, n: int) -> "TensorElement":
        out = TensorElement(self.system)
        out.terms = {w: c for w, c in self.terms.items() if len(w) == n}
        return out

    def scalar_value(self) -> Fraction:
        """The coefficient of the empty word; the element must have degree 0."""
        if any(len(w) for w in self.terms):
            raise ValueError("element is not a scalar")
        return self.terms.get((), Fraction(0))

    def __str__(self) -> str:
        return format_tensor(self)

    def __repr__(self) -> str:
        return f"TensorElement({format_tensor(self)!r})"

    def to_json(self) -> dict:
        return {"terms": [{"coeff": str(c),
                           "word": [{"root": list(a.root), "k": a.level} for a in w]}
                          for w, c in sorted(self.terms.items(), key=lambda t: _word_key(t[0]))]}


def _word_key(w: Word):
    return (len(w), [(a.root, a.level) for a in w])


def tensor_from_json(system: RootSystem, data: dict) -> TensorElement:
    t = TensorElement(system)
    for term in data["terms"]:
        letters = [label(system, a["root"], a["k"]) for a in term["word"]]
        t._add_term(tuple(letters), Fraction(term["coeff"]))
    return t


def format_label(system: RootSystem, a: AffineRootLabel) -> str:
    from .roots import type_a_indices, type_a_rank
    if type_a_rank(system) is not None:
        i, j = type_a_indices(system, a.root)
        name = f"{i}{j}" if max(i, j) < 10 else f"{i} {j}"
    else:
        name = "a:" + " ".join(str(c) for c in a.root)
    return f"[{name},{a.level}]"


def format_tensor(t: TensorElement) -> str:
    if t.is_zero():
        return "0"
    parts = []
    for w, c in sorted(t.terms.items(), key=lambda item: _word_key(item[0])):
        body = "".join(format_label(t.system, a) for a in w)
        mag = abs(c)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        parts.append(("-" if c < 0 else "+", text))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, text in parts[1:]:
        out += f" {sign} {text}"
    return out


# -- braiding and symmetrizer ------------------------------------------------------


def braiding(system: RootSystem, a: AffineRootLabel, b: AffineRootLabel) -> TensorElement:
    """``psi(a (x) b) = s_a(b) (x) a`` as a signed tensor of degree 2."""
    return TensorElement.word(system, (reflect_label(system, a, b), a))


def psi_at(t: TensorElement, i: int) -> TensorElement:
    """Apply the braiding to positions ``i, i+1`` (0-based) of every word."""
    sys = t.system
    out = TensorElement(sys)
    for w, c in t.terms.items():
        a, b = w[i], w[i + 1]
        out._add_term(w[:i] + (reflect_label(sys, a, b), a) + w[i + 2:], c)
    return out


def _sym_word(system: RootSystem, word: Word) -> dict[Word, Fraction]:
    n = len(word)
    if n <= 1:
        return {word: Fraction(1)}
    cache = _caches(system)["sym"]
    hit = cache.get(word)
    if hit is not None:
        return hit
    out: dict[Word, Fraction] = {}
    # sigma_n = (sigma_{n-1} (x) id) o sum_k psi_{n-1} ... psi_k
    for k in range(n):
        a = word[k]
        sign = 1
        moved = list(word[:k])
        for b in word[k + 1:]:
            rb = reflect_label(system, a, b)
            if rb.sign != 1:
                sign = -sign
                rb = AffineRootLabel(rb.root, rb.level, 1)
            moved.append(rb)
        head = _sym_word(system, tuple(moved))
        for hw, hc in head.items():
            key = hw + (a,)
            v = out.get(key, 0) + sign * hc
            if v:
                out[key] = v
            else:
                out.pop(key)
    if len(cache) > 200000:
        cache.clear()
    cache[word] = out
    return out


def symmetrize(t: TensorElement, cap: int = SYMMETRIZER_CAP) -> TensorElement:
    """The Woronowicz symmetrizer applied to each homogeneous component."""
    sys = t.system
    out = TensorElement(sys)
    for w, c in t.terms.items():
        if len(w) > cap:
            raise SymmetrizerCapError(f"symmetrizer degree {len(w)} exceeds cap {cap}")
        for sw, sc in _sym_word(sys, w).items():
            v = out.terms.get(sw, 0) + c * sc
            if v:
                out.terms[sw] = v
            else:
                out.terms.pop(sw)
    return out


def permutation_reduced_word(perm: Sequence[int]) -> list[int]:
    """A reduced word (0-based adjacent transpositions) for a permutation in one-line notation."""
    p = list(perm)
    word = []
    # bubble sort records right multiplications; reverse to get p = s_{i1} ... s_{il}
    changed = True
    while changed:
        changed = False
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                word.append(i)
                changed = True
    return word[::-1]


def symmetrize_reference(t: TensorElement) -> TensorElement:
    """Definition-level symmetrizer: sum over S_n of Psi_w along one reduced word each."""
    out = TensorElement(t.system)
    for n in t.degrees():
        comp = t.component(n)
        for perm in itertools.permutations(range(n)):
            cur = comp
            for i in reversed(permutation_reduced_word(perm)):
                cur = psi_at(cur, i)
            out = out + cur
    return out


def is_zero_in_B(t: TensorElement, cap: int = SYMMETRIZER_CAP) -> bool:
    return symmetrize(t, cap).is_zero()


def equal_in_B(a: TensorElement, b: TensorElement, cap: int = SYMMETRIZER_CAP) -> bool:
    return is_zero_in_B(a - b, cap)


def pi_projection(t: TensorElement) -> TensorElement:
    """Forget levels: ``[alpha, k] -> [alpha]``, realized as level-0 labels."""
    out = TensorElement(t.system)
    for w, c in t.terms.items():
        out._add_term(tuple(AffineRootLabel(a.root, 0, 1) for a in w), c)
    return out


# -- braided differentials -----------------------------------------------------------


def differential(t: TensorElement, d: AffineRootLabel) -> TensorElement:
    """Right action of ``D_d``; lowers degree by one."""
    sys = t.system
    out = TensorElement(sys)
    target = (d.root, d.level)
    for w, c in t.terms.items():
        for i, a in enumerate(w):
            if (a.root, a.level) != target:
                continue
            tail = tuple(reflect_label(sys, d, b) for b in w[i + 1:])
            out._add_term(w[:i] + tail, c * d.sign)
    return out


def generator_differential(t: TensorElement, i: int) -> TensorElement:
    return differential(t, generator_label(t.system, i))


def d_word(t: TensorElement, indices: Iterable[int]) -> TensorElement:
    """Apply ``D_{i}`` for each index in order (leftmost first)."""
    for i in indices:
        t = generator_differential(t, i)
    return t


def d_x(t: TensorElement, x: AffineWeylElement, word: Sequence[int] | None = None) -> TensorElement:
    """``D_x = D_{i_l} ... D_{i_1}`` for ``x = s_{i_1} ... s_{i_l}``: ``D_{i_l}`` acts first."""
    if word is None:
        word = aw.reduced_word(x)
    return d_word(t, reversed(list(word)))


def waf_degree(system: RootSystem, word: Iterable[AffineRootLabel]) -> AffineWeylElement:
    """Product of ``s_{alpha,k}`` over the letters."""
    x = aw.identity(system)
    for a in word:
        x = x * aw.affine_reflection(system, a.root, a.level)
    return x


def act_on_tensor(x: AffineWeylElement, t: TensorElement) -> TensorElement:
    """Diagonal action of ``W_af`` on every letter."""
    out = TensorElement(t.system)
    for w, c in t.terms.items():
        out._add_term(tuple(aw.act_on_label(x, a) for a in w), c)
    return out


# -- action on S and the extension B_af(S) -------------------------------------------


def act_on_S(d: AffineRootLabel, f: Polynomial, system: RootSystem) -> Polynomial:
    """``[alpha, k] f = d_alpha(f)``, independent of the level."""
    g = divided_difference(system, d.root, f)
    return g if d.sign == 1 else -g


def act_tensor_on_S(t: TensorElement, f: Polynomial) -> Polynomial:
    """Letters act as divided differences, rightmost first."""
    sys = t.system
    out = Polynomial(sys.rank)
    for w, c in t.terms.items():
        g = f
        for a in reversed(w):
            g = act_on_S(a, g, sys)
            if g.is_zero():
                break
        out = out + g * c
    return out


class BAfSElement:
    """``sum f_u * u`` with polynomial coefficients on the left of words."""

    __slots__ = ("system", "terms")

    def __init__(self, system: RootSystem, terms: Mapping[Word, Polynomial] | None = None):
        self.system = system
        self.terms: dict[Word, Polynomial] = {}
        if terms:
            for w, f in terms.items():
                self._add_term(tuple(w), f)

    def _add_term(self, word: Sequence[AffineRootLabel], f: Polynomial) -> None:
        sign = 1
        canon = []
        for a in word:
            if a.sign != 1:
                sign *= a.sign
                a = AffineRootLabel(a.root, a.level, 1)
            canon.append(a)
        key = tuple(canon)
        v = self.terms.get(key)
        v = f * sign if v is None else v + f * sign
        if v.is_zero():
            self.terms.pop(key, None)
        else:
            self.terms[key] = v

    @classmethod
    def from_polynomial(cls, system: RootSystem, f: Polynomial) -> "BAfSElement":
        return cls(system, {(): f})

    @classmethod
    def from_tensor(cls, t: TensorElement) -> "BAfSElement":
        n = t.system.rank
        return cls(t.system, {w: Polynomial.constant(n, c) for w, c in t.terms.items()})

    def __add__(self, other: "BAfSElement") -> "BAfSElement":
        out = BAfSElement(self.system, self.terms)
        for w, f in other.terms.items():
            out._add_term(w, f)
        return out

    def __neg__(self) -> "BAfSElement":
        return BAfSElement(self.system, {w: -f for w, f in self.terms.items()})

    def __sub__(self, other: "BAfSElement") -> "BAfSElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (BAfSElement, Polynomial, TensorElement)):
            return bafs_mul(self, _as_bafs(self.system, other))
        if isinstance(other, (int, Fraction)):
            return BAfSElement(self.system, {w: f * other for w, f in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Polynomial, TensorElement)):
            return bafs_mul(_as_bafs(self.system, other), self)
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, BAfSElement):
            return NotImplemented
        return self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient_tensors(self) -> dict[tuple[int, ...], TensorElement]:
        """Split ``sum f_u u`` as ``sum_m m * T_m`` over monomials ``m`` of S."""
        out: dict[tuple[int, ...], TensorElement] = {}
        for w, f in self.terms.items():
            for m, c in f.terms.items():
                out.setdefault(m, TensorElement(self.system))._add_term(w, c)
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, f in sorted(self.terms.items(), key=lambda item: _word_key(item[0])):
            body = "".join(format_label(self.system, a) for a in w)
            coeff = str(f)
            if not body:
                parts.append(coeff)
            elif coeff == "1":
                parts.append(body)
            elif len(f.terms) == 1 and not coeff.startswith("-"):
                parts.append(f"{coeff}*{body}")
            else:
                parts.append(f"({coeff})*{body}")
        return " + ".join(parts)


def _as_bafs(system: RootSystem, x) -> BAfSElement:
    if isinstance(x, BAfSElement):
        return x
    if isinstance(x, Polynomial):
        return BAfSElement.from_polynomial(system, x)
    if isinstance(x, TensorElement):
        return BAfSElement.from_tensor(x)
    raise TypeError(f"cannot interpret {type(x).__name__} in B_af(S)")


def push_polynomial(system: RootSystem, word: Word, g: Polynomial) -> dict[Word, Polynomial]:
    """Rewrite ``word * g`` as ``sum h_u u`` using ``[a,k] f = d_a f + s_a(f) [a,k]``."""
    out: dict[Word, Polynomial] = {}
    if not word:
        return {(): g}
    *init, a = word
    init = tuple(init)
    d = act_on_S(a, g, system)
    s = reflect_polynomial(system, a.root, g)
    if a.sign != 1:
        s = -s
    for w, h in push_polynomial(system, init, d).items() if not d.is_zero() else ():
        out[w] = out.get(w, Polynomial(system.rank)) + h
    for w, h in push_polynomial(system, init, s).items():
        key = w + (AffineRootLabel(a.root, a.level, 1),)
        out[key] = out.get(key, Polynomial(system.rank)) + h
    return {w: h for w, h in out.items() if not h.is_zero()}


def bafs_mul(a: BAfSElement, b: BAfSElement) -> BAfSElement:
    sys = a.system
    out = BAfSElement(sys)
    for u, f in a.terms.items():
        for v, g in b.terms.items():
            for w, h in push_polynomial(sys, u, g).items():
                out._add_term(w + v, f * h)
    return out


def bafs_is_zero(x: BAfSElement, cap: int = SYMMETRIZER_CAP) -> bool:
    """Zero test in ``B_af(S)``, a free left S-module over ``B_af``."""
    return all(is_zero_in_B(t, cap) for t in x.coefficient_tensors().values())


def bafs_equal(a: BAfSElement, b: BAfSElement, cap: int = SYMMETRIZER_CAP) -> bool:
    return bafs_is_zero(a - b, cap)


def phi(a, system: RootSystem | None = None) -> BAfSElement:
    """The nil-Hecke homomorphism: ``tau_i -> [alpha_i, 0]``, ``tau_0 -> [alpha_0, -1]``, ``f -> f``.

    A bare polynomial carries no root system, so ``system`` is required for it.
    """
    from .nilhecke import NilCoxeterElement, NilHeckeElement
    if isinstance(a, Polynomial):
        if system is None:
            raise TypeError("phi of a polynomial needs the root system")
        return BAfSElement.from_polynomial(system, a)
    if not isinstance(a, (NilCoxeterElement, NilHeckeElement)):
        raise TypeError(f"phi is not defined on {type(a).__name__}")
    sys = a.system
    out = BAfSElement(sys)
    if isinstance(a, NilCoxeterElement):
        items = [(x, Polynomial.constant(sys.rank, c)) for x, c in a.terms.items()]
    else:
        items = list(a.terms.items())
    for x, f in items:
        out._add_term(tuple(generator_label(sys, i) for i in aw.reduced_word(x)), f)
    return out


def phi_tau(x: AffineWeylElement) -> TensorElement:
    """``phi(tau_x)`` as a tensor: the generator letters along the reduced word."""
    sys = x.system
    return TensorElement.word(sys, (generator_label(sys, i) for i in aw.reduced_word(x)))


def dumps(t: TensorElement) -> str:
    return json.dumps(t.to_json(), sort_keys=True)
