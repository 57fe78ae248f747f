"""Type A operators DD(ij), T_i and the Dunkl-type sums on superregular symbols.

All operators act on the right, so ``apply_word(m, [a, b])`` is ``m a b``.
Only the identity chamber is used.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from . import affine_weyl as aw
from .bruhat_ops import (MarginExhausted, RegularModuleElement, _check_margin, _trusted,
                         beta_op, contraction_levels, decompose, lemma41_rule, random_superregular)
from .nichols import TensorElement, is_zero_in_B, label
from .roots import RootSystem, RootSystemError, epsilon_weight, type_a_rank, type_a_root


@dataclass(frozen=True)
class QuadOperator:
    """One of ``DD(i,j)``, ``T(i)``, ``Dunkl(i)``, or a composite applied left to right."""

    kind: str
    data: tuple

    def __post_init__(self):
        if self.kind not in ("DD", "T", "Dunkl", "composite"):
            raise ValueError(f"unknown operator kind {self.kind!r}")
        if self.kind == "DD" and (len(self.data) != 2 or self.data[0] == self.data[1]):
            raise ValueError("DD needs two distinct indices")

    @classmethod
    def dd(cls, i: int, j: int) -> "QuadOperator":
        return cls("DD", (i, j))

    def __matmul__(self, other: "QuadOperator") -> "QuadOperator":
        left = self.data if self.kind == "composite" else (self,)
        right = other.data if other.kind == "composite" else (other,)
        return QuadOperator("composite", left + right)

    def apply(self, m: RegularModuleElement, k_lower: int = 2, margin: int = 0) -> RegularModuleElement:
        if self.kind == "DD":
            return dd_apply(*self.data, m, k_lower=k_lower, margin=margin)
        if self.kind == "T":
            return t_apply(self.data[0], m, margin=margin)
        if self.kind == "Dunkl":
            return dunkl_apply(self.data[0], m, k_lower=k_lower, margin=margin)
        for op in self.data:
            m = op.apply(m, k_lower, margin)
        return m

    def __str__(self):
        if self.kind == "composite":
            return " ".join(str(op) for op in self.data)
        return f"{self.kind}({','.join(map(str, self.data))})"


def _require_type_a(system: RootSystem) -> int:
    n = type_a_rank(system)
    if n is None:
        raise RootSystemError("the quadratic operators are defined for type A only")
    return n


def dd_apply(i: int, j: int, m: RegularModuleElement, k_lower: int = 2, margin: int = 0,
             trace: list | None = None) -> RegularModuleElement:
    """``m DD(ij)`` with ``DD(ij) = sum_{k >= k_lower} D_{[eps_i - eps_j, k]}`` and ``DD(ji) = -DD(ij)``."""
    sys = m.system
    _require_type_a(sys)
    if i > j:
        return -dd_apply(j, i, m, k_lower, margin, trace)
    root = type_a_root(sys, i, j)
    out = {}
    for x, f in m.terms.items():
        for k in contraction_levels(x, root, k_lower):
            y = lemma41_rule(x, root, k)
            if y is None:
                continue
            _check_margin(y, margin)
            if trace is not None:
                trace.append((x, k, y))
            out[y] = out[y] + f if y in out else f
    return _trusted(sys, out)


def t_apply(i: int, m: RegularModuleElement, margin: int = 0, inverse: bool = False) -> RegularModuleElement:
    """``T_i <x> = <x t_{alpha_i^vee}>`` (``t_{-alpha_i^vee}`` when ``inverse``)."""
    sys = m.system
    _require_type_a(sys)
    step = tuple((-1 if inverse else 1) * int(c == i - 1) for c in range(sys.rank))
    t = aw.translation(sys, step)
    out = {}
    for x, f in m.terms.items():
        y = x * t
        _check_margin(y, margin)
        out[y] = f
    return _trusted(sys, out)


def dunkl_apply(i: int, m: RegularModuleElement, k_lower: int = 2, margin: int = 0) -> RegularModuleElement:
    """``m sum_{j != i} DD(ij)``."""
    n = _require_type_a(m.system)
    out = RegularModuleElement(m.system)
    for j in range(1, n + 1):
        if j != i:
            out = out + dd_apply(i, j, m, k_lower, margin)
    return out


def dunkl_via_beta(i: int, m: RegularModuleElement, k_lower: int = 2) -> RegularModuleElement:
    """Non-equivariant ``beta^{eps_i}`` on the identity chamber, for comparison with :func:`dunkl_apply`."""
    return beta_op(epsilon_weight(m.system, i), m, k_lower_bound=k_lower, equivariant=False)


def apply_word(m: RegularModuleElement, ops: Sequence[QuadOperator], k_lower: int = 2,
               margin: int = 0) -> RegularModuleElement:
    for op in ops:
        m = op.apply(m, k_lower, margin)
    return m


def _dd(i, j):
    return QuadOperator.dd(i, j)


# -- relation checks -----------------------------------------------------------------


def square_case(x, k: int, root_index: int) -> str | None:
    """Which shape a contributing first level ``k`` has: ``(1)`` at ``-<lam,a>``, ``(2)`` one below."""
    d = decompose(x)
    p = -x.system.pairing_index(root_index, d.lam)
    if k == p:
        return "case-1"
    if k == p - 1:
        return "case-2"
    return None


def sample_elements(system: RootSystem, trials: int, seed: int, op_count: int = 4, margin: int = 0):
    rng = random.Random(seed)
    ident = system.identity
    return [random_superregular(system, rng, v=ident, slack=margin + 4 * op_count) for _ in range(trials)]


def verify_prop51(n: int, trials: int = 25, seed: int = 0, k_lower: int = 2, margin: int = 0) -> dict:
    """Check the square, disjoint commutation and cyclic three-term relations on sampled symbols.

    Returns ``{"entries": [{relation, instance, status, ...}], "cases": {...}}``.
    """
    from .roots import preset

    sys = preset(f"A{n - 1}")
    xs = sample_elements(sys, trials, seed, margin=margin)
    entries = []
    cases = {"case-1": 0, "case-2": 0}
    idx = range(1, n + 1)

    def record(relation, t, x, ok, **extra):
        entries.append({"relation": relation, "instance": {"sample": t, "x": x.to_json()},
                        "status": "pass" if ok else "fail", **extra})

    for t, x in enumerate(xs):
        m = RegularModuleElement.basis(x)
        try:
            for i, j in itertools.combinations(idx, 2):
                trace: list = []
                first = dd_apply(i, j, m, k_lower, margin, trace)
                sq = dd_apply(i, j, first, k_lower, margin)
                expect = t_apply(i, m, margin) if j == i + 1 else RegularModuleElement(sys)
                record(f"square DD({i}{j})^2", t, x, sq == expect)
                if j == i + 1 and not sq.is_zero():
                    b = sys.index(type_a_root(sys, i, j))
                    for _x, k, y in trace:
                        if dd_apply(i, j, RegularModuleElement.basis(y), k_lower, margin).is_zero():
                            continue
                        c = square_case(x, k, b)
                        if c:
                            cases[c] += 1
            for (i, j), (k, l) in itertools.product(itertools.combinations(idx, 2), repeat=2):
                if {i, j} & {k, l} or (i, j) >= (k, l):
                    continue
                a = apply_word(m, [_dd(i, j), _dd(k, l)], k_lower, margin)
                b = apply_word(m, [_dd(k, l), _dd(i, j)], k_lower, margin)
                record(f"commute DD({i}{j}) DD({k}{l})", t, x, a == b)
            for i, j, k in itertools.permutations(idx, 3):
                total = (apply_word(m, [_dd(i, j), _dd(j, k)], k_lower, margin)
                         + apply_word(m, [_dd(j, k), _dd(k, i)], k_lower, margin)
                         + apply_word(m, [_dd(k, i), _dd(i, j)], k_lower, margin))
                record(f"cyclic ({i}{j}{k})", t, x, total.is_zero(), form="cyclic")
        except MarginExhausted as exc:
            entries.append({"relation": "margin", "instance": {"sample": t, "x": x.to_json()},
                            "status": "skipped", "reason": str(exc)})
    return {"entries": entries, "cases": cases,
            "note": "three-term relation tested in the cyclic form "
                    "DD(ij)DD(jk) + DD(jk)DD(ki) + DD(ki)DD(ij) = 0"}


def verify_t_commutation(n: int, trials: int = 25, seed: int = 0, k_lower: int = 2) -> list[dict]:
    from .roots import preset

    sys = preset(f"A{n - 1}")
    out = []
    for t, x in enumerate(sample_elements(sys, trials, seed)):
        m = RegularModuleElement.basis(x)
        for i in range(1, n):
            for j, k in itertools.permutations(range(1, n + 1), 2):
                lhs = dd_apply(j, k, t_apply(i, m), k_lower)
                rhs = t_apply(i, dd_apply(j, k, m, k_lower))
                out.append({"relation": f"T{i} DD({j}{k})", "instance": {"sample": t},
                            "status": "pass" if lhs == rhs else "fail"})
    return out


def verify_dunkl(n: int, trials: int = 25, seed: int = 0, k_lower: int = 2) -> list[dict]:
    """Pairwise commutativity of the Dunkl-type sums, their agreement with beta, and their vanishing total."""
    from .roots import preset

    sys = preset(f"A{n - 1}")
    out = []
    for t, x in enumerate(sample_elements(sys, trials, seed)):
        m = RegularModuleElement.basis(x)
        singles = {i: dunkl_apply(i, m, k_lower) for i in range(1, n + 1)}
        for i in range(1, n + 1):
            out.append({"relation": f"dunkl({i}) = beta(eps{i})", "instance": {"sample": t},
                        "status": "pass" if singles[i] == dunkl_via_beta(i, m, k_lower) else "fail"})
        for i, j in itertools.combinations(range(1, n + 1), 2):
            a = dunkl_apply(j, singles[i], k_lower)
            b = dunkl_apply(i, singles[j], k_lower)
            out.append({"relation": f"[dunkl({i}), dunkl({j})]", "instance": {"sample": t},
                        "status": "pass" if a == b else "fail"})
        total = RegularModuleElement(sys)
        for s in singles.values():
            total = total + s
        out.append({"relation": "sum of dunkl", "instance": {"sample": t},
                    "status": "pass" if total.is_zero() else "fail"})
    return out


def degree_two_identities(n: int, level_range: range = range(-3, 4)) -> list[dict]:
    """Symmetrizer checks of the three-term and disjoint commutation identities in the tensor model."""
    from .roots import preset

    sys = preset(f"A{n - 1}")

    def lab(i, j, k):
        return label(sys, type_a_root(sys, i, j), k)

    def word(*letters):
        return TensorElement.word(sys, letters)

    out = []
    idx = range(1, n + 1)
    for i, j, k in itertools.permutations(idx, 3):
        for a in level_range:
            for b in level_range:
                t = (word(lab(i, j, a), lab(j, k, b)) + word(lab(j, k, b), lab(k, i, -a - b))
                     + word(lab(k, i, -a - b), lab(i, j, a)))
                out.append({"relation": f"three-term [{i}{j},{a}][{j}{k},{b}]",
                            "status": "pass" if is_zero_in_B(t) else "fail"})
    for (i, j), (k, l) in itertools.product(itertools.permutations(idx, 2), repeat=2):
        if {i, j} & {k, l}:
            continue
        for a in level_range:
            for b in level_range:
                t = word(lab(i, j, a), lab(k, l, b)) - word(lab(k, l, b), lab(i, j, a))
                out.append({"relation": f"disjoint [{i}{j},{a}][{k}{l},{b}]",
                            "status": "pass" if is_zero_in_B(t) else "fail"})
    return out
