"""The affine Weyl group ``W ⋉ Q^vee`` and its action on real affine roots.

An element is stored as a pair ``(w, lam)`` standing for ``w * t_lam``.  The
group acts on the coweight space by ``t_lam(p) = p + lam`` and linearly through
``W``; the affine reflection ``s_{alpha,k}`` fixes ``{<alpha, p> = k}`` and
equals ``s_alpha * t_{-k alpha^vee}``.  Labels ``[alpha, k]`` are read as the
affine functionals ``p -> <alpha, p> - k``, on which the group acts by

    w[alpha, k] = [w(alpha), k],        t_lam[alpha, k] = [alpha, k + <alpha, lam>].

Length counts the affine hyperplanes separating the fundamental alcove
``{<alpha_i, p> > 0, <theta, p> < 1}`` from its image.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .roots import CorootVector, Root, RootSystem, WeylElement


class AffineRootLabel(NamedTuple):
    """A signed real affine root ``sign * [root, level]`` with ``root`` positive."""

    root: Root
    level: int
    sign: int = 1

    @classmethod
    def make(cls, system: RootSystem, root: Sequence[int], level: int) -> "AffineRootLabel":
        """Canonicalize ``[root, level]`` using ``[-a, -k] = -[a, k]``."""
        idx = system.index(root)
        if system.is_positive(idx):
            return cls(system.roots[idx], level, 1)
        return cls(system.roots[system.negate(idx)], -level, -1)

    @property
    def unsigned(self) -> "AffineRootLabel":
        return AffineRootLabel(self.root, self.level, 1) if self.sign != 1 else self

    def __neg__(self) -> "AffineRootLabel":
        return AffineRootLabel(self.root, self.level, -self.sign)

    def signed_root(self) -> tuple[Root, int]:
        """The pair ``(sign*root, sign*level)`` before canonicalization."""
        if self.sign == 1:
            return self.root, self.level
        return tuple(-c for c in self.root), -self.level


class LengthBoundError(RuntimeError):
    pass


@dataclass(frozen=True)
class AffineWeylElement:
    w: WeylElement
    lam: CorootVector
    system: RootSystem = field(compare=False, repr=False)

    # -- group law -------------------------------------------------------------

    def __mul__(self, other: "AffineWeylElement") -> "AffineWeylElement":
        sys = self.system
        shifted = sys.act_coroot(other.w.inverse(), self.lam)
        return AffineWeylElement(self.w * other.w,
                                 tuple(a + b for a, b in zip(shifted, other.lam)), sys)

    def inverse(self) -> "AffineWeylElement":
        winv = self.w.inverse()
        # (w t_lam)^{-1} = t_{-lam} w^{-1} = w^{-1} t_{-w(lam)}
        lam = self.system.act_coroot(self.w, self.lam)
        return AffineWeylElement(winv, tuple(-c for c in lam), self.system)

    def is_identity(self) -> bool:
        return self.w == self.system.identity and not any(self.lam)

    # -- actions ----------------------------------------------------------------

    def act_on_label(self, v: AffineRootLabel) -> AffineRootLabel:
        return act_on_label(self, v)

    def act_on_point(self, p: Sequence) -> tuple:
        """Action on a point of the coweight space given in simple-coroot coordinates."""
        sys = self.system
        q = [a + b for a, b in zip(p, self.lam)]
        r = sys.rank
        out = [0] * r
        for i, c in enumerate(q):
            if c:
                img = sys.coroot(self.w.perm[sys.simple_indices[i]])
                for j in range(r):
                    out[j] += c * img[j]
        return tuple(out)

    @property
    def length(self) -> int:
        return length(self)

    def to_json(self) -> dict:
        return {"w": self.system.weyl_word(self.w), "lam": list(self.lam)}

    def __repr__(self) -> str:
        return f"AffineWeylElement(w={self.system.weyl_word(self.w)}, lam={list(self.lam)})"


def element(system: RootSystem, w: WeylElement | Iterable[int] | None = None,
            lam: Sequence[int] | None = None) -> AffineWeylElement:
    """Build ``w * t_lam``; ``w`` may be a finite reduced word over 1..r."""
    if w is None:
        w = system.identity
    elif not isinstance(w, WeylElement):
        w = system.weyl_from_word(w)
    if lam is None:
        lam = (0,) * system.rank
    return AffineWeylElement(w, tuple(int(c) for c in lam), system)


def identity(system: RootSystem) -> AffineWeylElement:
    return element(system)


def translation(system: RootSystem, lam: Sequence[int]) -> AffineWeylElement:
    return element(system, None, lam)


def from_json(system: RootSystem, data: dict) -> AffineWeylElement:
    return element(system, data["w"], data["lam"])


def affine_reflection(system: RootSystem, root: Sequence[int], k: int) -> AffineWeylElement:
    """``s_{root,k}`` as the pair ``(s_root, -k root^vee)``."""
    idx = system.index(root)
    cor = system.coroot(idx)
    return AffineWeylElement(system.reflection(idx), tuple(-k * c for c in cor), system)


def simple_affine_reflection(system: RootSystem, i: int) -> AffineWeylElement:
    """``s_i = s_{alpha_i,0}`` for ``i >= 1`` and ``s_0 = s_{theta,1}``."""
    if i == 0:
        return affine_reflection(system, system.highest_root, 1)
    if not 1 <= i <= system.rank:
        raise ValueError(f"generator index {i} out of range 0..{system.rank}")
    return AffineWeylElement(system.simple_reflections[i - 1], (0,) * system.rank, system)


def from_word(system: RootSystem, word: Iterable[int]) -> AffineWeylElement:
    x = identity(system)
    for i in word:
        x = x * simple_affine_reflection(system, i)
    return x


def act_on_label(x: AffineWeylElement, v: AffineRootLabel) -> AffineRootLabel:
    sys = x.system
    idx = sys.index(v.root)
    level = v.level + sys.pairing_index(idx, x.lam)
    img = x.w.perm[idx]
    if sys.is_positive(img):
        return AffineRootLabel(sys.roots[img], level, v.sign)
    return AffineRootLabel(sys.roots[sys.negate(img)], -level, -v.sign)


def length(x: AffineWeylElement) -> int:
    """Number of affine hyperplanes separating the fundamental alcove from ``x`` of it."""
    sys = x.system
    total = 0
    n = sys.npos
    perm = x.w.perm
    for b in range(n):
        m = sys.pairing_index(b, x.lam)
        total += abs(m) if perm[b] < n else abs(m + 1)
    return total


def generator_order(system: RootSystem) -> tuple[int, ...]:
    """Preference order of generators for descent selection: 1..r, then 0."""
    return tuple(range(1, system.rank + 1)) + (0,)


def left_descents(x: AffineWeylElement) -> list[int]:
    n = length(x)
    return [i for i in generator_order(x.system)
            if length(simple_affine_reflection(x.system, i) * x) < n]


def right_descents(x: AffineWeylElement) -> list[int]:
    n = length(x)
    return [i for i in generator_order(x.system)
            if length(x * simple_affine_reflection(x.system, i)) < n]


def reduced_word(x: AffineWeylElement) -> list[int]:
    """Reduced word of ``x``, choosing the first left descent in the order 1..r, 0.

    This is the lexicographically least reduced word when generator 0 is
    ranked after 1..r.
    """
    sys = x.system
    gens = [simple_affine_reflection(sys, i) for i in range(sys.rank + 1)]
    word = []
    cur = x
    n = length(cur)
    while n:
        for i in generator_order(sys):
            nxt = gens[i] * cur
            m = length(nxt)
            if m < n:
                word.append(i)
                cur, n = nxt, m
                break
    return word


def all_reduced_words(x: AffineWeylElement) -> list[list[int]]:
    """Every reduced word of ``x`` (exponential in length; small inputs only)."""
    sys = x.system
    memo: dict[AffineWeylElement, list[list[int]]] = {}

    def rec(y: AffineWeylElement) -> list[list[int]]:
        if y in memo:
            return memo[y]
        n = length(y)
        if n == 0:
            return [[]]
        out = []
        for i in generator_order(sys):
            z = simple_affine_reflection(sys, i) * y
            if length(z) < n:
                out.extend([i] + rest for rest in rec(z))
        memo[y] = out
        return out

    return rec(x)


def reflection_data(z: AffineWeylElement) -> tuple[Root, int] | None:
    """Return ``(alpha, k)`` with alpha positive if ``z = s_{alpha,k}``, else None."""
    sys = z.system
    for b in range(sys.npos):
        if sys.reflection(b) == z.w:
            cor = sys.coroot(b)
            j = next(t for t, c in enumerate(cor) if c)
            m, rem = divmod(z.lam[j], cor[j])
            if rem == 0 and all(m * c == l for c, l in zip(cor, z.lam)):
                return sys.roots[b], -m
            return None
    return None


def is_reflection(z: AffineWeylElement) -> bool:
    return reflection_data(z) is not None


def is_cover(y: AffineWeylElement, x: AffineWeylElement) -> bool:
    """Whether ``y -> x`` is a Bruhat cover: ``y^{-1} x`` a reflection and ``l(x) = l(y) + 1``."""
    if length(x) != length(y) + 1:
        return False
    return is_reflection(y.inverse() * x)


def bfs_oracle(system: RootSystem, max_len: int, max_elements: int = 200000) -> dict[AffineWeylElement, int]:
    """Lengths of all elements up to ``max_len`` by breadth-first search over generators.

    Independent of :func:`length`: an element's length is the BFS depth at
    which it first appears.
    """
    gens = [simple_affine_reflection(system, i) for i in range(system.rank + 1)]
    e = identity(system)
    dist = {e: 0}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        d = dist[x]
        if d == max_len:
            continue
        for s in gens:
            y = x * s
            if y not in dist:
                dist[y] = d + 1
                if len(dist) > max_elements:
                    raise LengthBoundError(f"more than {max_elements} elements up to length {max_len}")
                queue.append(y)
    return dist


def coxeter_exponent(system: RootSystem, i: int, j: int, cap: int = 12) -> int | None:
    """Order of ``s_i s_j`` in the affine Weyl group, or None if it exceeds ``cap``."""
    si, sj = simple_affine_reflection(system, i), simple_affine_reflection(system, j)
    prod = si * sj
    cur = prod
    for m in range(1, cap + 1):
        if cur.is_identity():
            return m
        cur = cur * prod
    return None
