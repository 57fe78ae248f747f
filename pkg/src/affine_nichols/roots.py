"""Finite crystallographic root systems generated from Cartan matrices.

Conventions used throughout the package:

* ``cartan[i][j] = <alpha_j, alpha_i^vee>`` (row index is the coroot).
* A root is an integer tuple of coordinates over the simple roots.
* A coroot-lattice vector is an integer tuple over the simple coroots.
* A weight is a tuple of coordinates over the fundamental weights, so the
  pairing of a weight with a coroot vector is the plain dot product.

Roots are stored in a fixed list (positive roots first, sorted by height,
then their negatives in the same order) and finite Weyl group elements are
permutations of that list.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from pathlib import Path
from typing import Iterable, Sequence

Root = tuple[int, ...]
CorootVector = tuple[int, ...]
Weight = tuple

MAX_ROOTS = 20000


class RootSystemError(ValueError):
    """Raised for malformed Cartan data or non-finite types."""


@dataclass(frozen=True)
class CartanData:
    cartan: tuple[tuple[int, ...], ...]
    symmetrizers: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]],
                    symmetrizers: Sequence[int] | None = None) -> "CartanData":
        a = tuple(tuple(int(v) for v in row) for row in matrix)
        r = len(a)
        if r == 0 or any(len(row) != r for row in a):
            raise RootSystemError("Cartan matrix must be a non-empty square matrix")
        for i in range(r):
            if a[i][i] != 2:
                raise RootSystemError(f"diagonal entry a[{i}][{i}] = {a[i][i]} != 2")
            for j in range(r):
                if i == j:
                    continue
                if a[i][j] > 0:
                    raise RootSystemError(f"off-diagonal entry a[{i}][{j}] is positive")
                if (a[i][j] == 0) != (a[j][i] == 0):
                    raise RootSystemError(f"a[{i}][{j}] = 0 but a[{j}][{i}] != 0")
        d = tuple(symmetrizers) if symmetrizers is not None else _symmetrize(a)
        if len(d) != r or any(x <= 0 for x in d):
            raise RootSystemError("symmetrizers must be r positive integers")
        for i in range(r):
            for j in range(r):
                if d[i] * a[i][j] != d[j] * a[j][i]:
                    raise RootSystemError("symmetrizers do not symmetrize the Cartan matrix")
        return cls(a, tuple(int(x) for x in d))


def _symmetrize(a: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    r = len(a)
    d: list[Fraction | None] = [None] * r
    for start in range(r):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(r):
                if j != i and a[i][j] != 0:
                    want = d[i] * a[i][j] / a[j][i]
                    if d[j] is None:
                        d[j] = want
                        stack.append(j)
                    elif d[j] != want:
                        raise RootSystemError("Cartan matrix is not symmetrizable")
    den = 1
    for x in d:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in d]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


@dataclass(frozen=True)
class WeylElement:
    """A finite Weyl group element, stored as a permutation of the root list."""

    perm: tuple[int, ...]

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        p = self.perm
        return WeylElement(tuple(p[i] for i in other.perm))

    def inverse(self) -> "WeylElement":
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i
        return WeylElement(tuple(inv))

    def __call__(self, root_index: int) -> int:
        return self.perm[root_index]


class RootSystem:
    """Root data of a finite irreducible crystallographic root system."""

    def __init__(self, cartan: CartanData | Sequence[Sequence[int]], name: str | None = None,
                 max_roots: int = MAX_ROOTS):
        if not isinstance(cartan, CartanData):
            cartan = CartanData.from_matrix(cartan)
        self.cartan_data = cartan
        self.cartan = cartan.cartan
        self.rank = r = cartan.rank
        self.name = name or f"rank{r}"
        if not _connected(self.cartan):
            raise RootSystemError("Cartan matrix is decomposable; only irreducible systems are supported")

        simples = [tuple(int(i == j) for j in range(r)) for i in range(r)]
        found = set(simples)
        frontier = list(simples)
        while frontier:
            nxt = []
            for beta in frontier:
                for i in range(r):
                    gamma = self._reflect_vec(i, beta)
                    if all(c >= 0 for c in gamma) and gamma not in found:
                        found.add(gamma)
                        nxt.append(gamma)
                        if len(found) > max_roots:
                            raise RootSystemError("not finite type")
            frontier = nxt
        pos = sorted(found, key=lambda b: (sum(b), tuple(-c for c in b)))
        self.positive_roots: tuple[Root, ...] = tuple(pos)
        self.npos = len(pos)
        self.roots: tuple[Root, ...] = self.positive_roots + tuple(
            tuple(-c for c in b) for b in pos)
        self._index = {b: i for i, b in enumerate(self.roots)}
        self.simple_indices = tuple(self._index[s] for s in simples)

        d = cartan.symmetrizers
        # pairing vectors <beta, alpha_i^vee> = sum_j a[i][j] c_j; also the weight coords of beta
        self._pair = tuple(tuple(sum(self.cartan[i][j] * b[j] for j in range(r)) for i in range(r))
                           for b in self.roots)
        coroots = []
        for b in self.roots:
            norm = sum(b[i] * b[j] * d[i] * self.cartan[i][j] for i in range(r) for j in range(r))
            vec = []
            for j in range(r):
                num = 2 * b[j] * d[j]
                if num % norm:
                    raise RootSystemError("coroot is not integral; check the symmetrizers")
                vec.append(num // norm)
            coroots.append(tuple(vec))
        self._coroots = tuple(coroots)

        self.highest_root: Root = max(pos, key=sum)
        if sum(1 for b in pos if sum(b) == sum(self.highest_root)) != 1:
            raise RootSystemError("no unique highest root")
        self.highest_index = self._index[self.highest_root]
        self.coxeter_number = sum(self.highest_root) + 1

        self.simple_reflections = tuple(
            WeylElement(tuple(self._index[self._reflect_vec(i, b)] for b in self.roots))
            for i in range(r))
        self.identity = WeylElement(tuple(range(len(self.roots))))
        self._reflection_cache: dict[int, WeylElement] = {}
        self._order: int | None = None

    # -- basic root arithmetic -------------------------------------------------

    def _reflect_vec(self, i: int, beta: Root) -> Root:
        p = sum(self.cartan[i][j] * beta[j] for j in range(self.rank))
        return tuple(c - p if j == i else c for j, c in enumerate(beta))

    def index(self, root: Sequence[int]) -> int:
        try:
            return self._index[tuple(root)]
        except KeyError:
            raise ValueError(f"{tuple(root)} is not a root") from None

    def is_root(self, root: Sequence[int]) -> bool:
        return tuple(root) in self._index

    def is_positive(self, root_index: int) -> bool:
        return root_index < self.npos

    def negate(self, root_index: int) -> int:
        return root_index + self.npos if root_index < self.npos else root_index - self.npos

    def reflect(self, i: int, beta: Sequence[int]) -> Root:
        """Apply the simple reflection s_i to the root beta."""
        if not self.is_root(beta):
            raise ValueError(f"{tuple(beta)} is not a root")
        return self._reflect_vec(i, tuple(beta))

    def coroot(self, root: Sequence[int] | int) -> CorootVector:
        idx = root if isinstance(root, int) else self.index(root)
        return self._coroots[idx]

    def pairing_vector(self, root_index: int) -> tuple[int, ...]:
        """``(<beta, alpha_1^vee>, ..., <beta, alpha_r^vee>)``; equals beta in weight coordinates."""
        return self._pair[root_index]

    def pairing(self, x: Sequence, y: Sequence[int], weight: bool = False):
        """Pair ``x`` with a coroot-lattice vector ``y``.

        ``x`` is read in simple-root coordinates (any root-lattice vector), or
        in fundamental-weight coordinates when ``weight`` is true.
        """
        vec = tuple(x) if weight else self.root_to_weight(x)
        return sum(a * b for a, b in zip(vec, y))

    def pairing_index(self, root_index: int, lam: Sequence[int]) -> int:
        return sum(a * b for a, b in zip(self._pair[root_index], lam))

    def root_to_weight(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Fundamental-weight coordinates of an element of the root lattice."""
        r = self.rank
        return tuple(sum(self.cartan[i][j] * vec[j] for j in range(r)) for i in range(r))

    def height(self, root: Sequence[int]) -> int:
        return sum(root)

    def two_rho_pairing(self, root: Sequence[int] | int) -> int:
        """``<alpha^vee, 2 rho>`` = twice the height of the coroot."""
        return 2 * sum(self.coroot(root))

    # -- finite Weyl group -----------------------------------------------------

    def weyl_from_word(self, word: Iterable[int]) -> WeylElement:
        w = self.identity
        for i in word:
            w = w * self.simple_reflections[i - 1]
        return w

    def reflection(self, root: Sequence[int] | int) -> WeylElement:
        """The reflection s_beta of the finite Weyl group."""
        idx = root if isinstance(root, int) else self.index(root)
        if idx >= self.npos:
            idx -= self.npos
        cached = self._reflection_cache.get(idx)
        if cached is not None:
            return cached
        cor = self._coroots[idx]
        beta = self.roots[idx]
        perm = []
        for g, gamma in enumerate(self.roots):
            p = sum(a * b for a, b in zip(self._pair[g], cor))
            perm.append(self._index[tuple(c - p * e for c, e in zip(gamma, beta))])
        w = WeylElement(tuple(perm))
        self._reflection_cache[idx] = w
        return w

    def weyl_length(self, w: WeylElement) -> int:
        n = self.npos
        return sum(1 for i in range(n) if w.perm[i] >= n)

    def weyl_word(self, w: WeylElement) -> list[int]:
        """Reduced word (letters 1..r) of a finite Weyl element; least left descent first."""
        word = []
        n = self.npos
        while w != self.identity:
            inv = w.inverse()
            for i in range(self.rank):
                if inv.perm[self.simple_indices[i]] >= n:
                    word.append(i + 1)
                    w = self.simple_reflections[i] * w
                    break
        return word

    def act_root(self, w: WeylElement, root: Sequence[int]) -> Root:
        return self.roots[w.perm[self.index(root)]]

    def act_coroot(self, w: WeylElement, lam: Sequence[int]) -> CorootVector:
        r = self.rank
        out = [0] * r
        for i, c in enumerate(lam):
            if c:
                img = self._coroots[w.perm[self.simple_indices[i]]]
                for j in range(r):
                    out[j] += c * img[j]
        return tuple(out)

    def act_weight(self, w: WeylElement, mu: Sequence) -> tuple:
        """Weyl action on fundamental-weight coordinates."""
        inv = w.inverse()
        # <w mu, alpha_i^vee> = <mu, w^{-1} alpha_i^vee>
        return tuple(sum(m * c for m, c in zip(mu, self._coroots[inv.perm[s]]))
                     for s in self.simple_indices)

    def elements(self) -> list[WeylElement]:
        """All elements of W, breadth first from the identity."""
        seen = {self.identity}
        order = [self.identity]
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for s in self.simple_reflections:
                    u = w * s
                    if u not in seen:
                        seen.add(u)
                        order.append(u)
                        nxt.append(u)
            frontier = nxt
        self._order = len(order)
        return order

    @property
    def weyl_order(self) -> int:
        if self._order is None:
            self.elements()
        return self._order

    @property
    def longest_element(self) -> WeylElement:
        # the unique element sending every positive root to a negative one
        n = self.npos
        w = self.identity
        while self.weyl_length(w) < n:
            for i, s in enumerate(self.simple_reflections):
                if w.perm[self.simple_indices[i]] < n:
                    w = w * s
                    break
        return w

    def __repr__(self) -> str:
        return f"RootSystem({self.name})"


def _connected(a) -> bool:
    r = len(a)
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(r):
            if a[i][j] and j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == r


def cartan_matrix(family: str, n: int) -> list[list[int]]:
    """Cartan matrix of a classical or exceptional type in our convention."""
    family = family.upper()
    if family == "G" and n == 2:
        return [[2, -3], [-1, 2]]
    if family == "F" and n == 4:
        return [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -2, 2, -1], [0, 0, -1, 2]]
    if n < 1:
        raise RootSystemError("rank must be positive")
    a = [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)]
    if family == "A":
        return a
    if family == "B" and n >= 2:
        a[n - 1][n - 2] = -2
        return a
    if family == "C" and n >= 2:
        a[n - 2][n - 1] = -2
        return a
    if family == "D" and n >= 4:
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
        return a
    raise RootSystemError(f"unknown preset {family}{n}")


_PRESET_CACHE: dict[str, RootSystem] = {}


def preset(name: str) -> RootSystem:
    """A root system by type name, e.g. ``"A2"``, ``"B2"``, ``"G2"``."""
    key = name.strip().upper()
    if key not in _PRESET_CACHE:
        if len(key) < 2 or not key[1:].isdigit():
            raise RootSystemError(f"unknown preset {name!r}")
        family, n = key[0], int(key[1:])
        if family == "A" and n > 7:
            raise RootSystemError("type A presets are limited to A1..A7")
        _PRESET_CACHE[key] = RootSystem(cartan_matrix(family, n), name=key)
    return _PRESET_CACHE[key]


def load_system(spec: str) -> RootSystem:
    """Resolve a preset name or a path to a JSON integer matrix."""
    path = Path(spec)
    if path.suffix == ".json" or path.is_file():
        data = json.loads(path.read_text())
        if isinstance(data, dict):
            return RootSystem(CartanData.from_matrix(data["cartan"], data.get("symmetrizers")),
                              name=data.get("name", path.stem))
        return RootSystem(data, name=path.stem)
    return preset(spec)


def build_root_system(cartan: CartanData | Sequence[Sequence[int]], name: str | None = None) -> RootSystem:
    return RootSystem(cartan, name=name)


def type_a_rank(system: RootSystem) -> int | None:
    """Return n if the system is A_{n-1}, else None."""
    r = system.rank
    if [list(row) for row in system.cartan] == cartan_matrix("A", r):
        return r + 1
    return None


def type_a_root(system: RootSystem, i: int, j: int) -> Root:
    """The root eps_i - eps_j (1-based, i != j) of A_{n-1} in simple-root coordinates."""
    n = type_a_rank(system)
    if n is None:
        raise RootSystemError("epsilon notation requires a type A system")
    if not (1 <= i <= n and 1 <= j <= n and i != j):
        raise ValueError(f"bad epsilon indices {i}, {j}")
    lo, hi = min(i, j), max(i, j)
    vec = tuple(1 if lo - 1 <= k < hi - 1 else 0 for k in range(n - 1))
    return vec if i < j else tuple(-c for c in vec)


def type_a_indices(system: RootSystem, root: Sequence[int]) -> tuple[int, int]:
    """Inverse of :func:`type_a_root`."""
    nz = [k for k, c in enumerate(root) if c]
    lo, hi = nz[0] + 1, nz[-1] + 2
    return (lo, hi) if root[nz[0]] > 0 else (hi, lo)


def epsilon_weight(system: RootSystem, i: int) -> tuple[int, ...]:
    """Fundamental-weight coordinates of eps_i, modulo eps_1 + ... + eps_n."""
    n = type_a_rank(system)
    if n is None:
        raise RootSystemError("epsilon weights require a type A system")
    # <eps_i, alpha_j^vee> = delta_{ij} - delta_{i, j+1}
    return tuple(int(i == j) - int(i == j + 1) for j in range(1, n))
