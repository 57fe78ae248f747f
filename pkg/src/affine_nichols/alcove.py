"""Reduced alcove paths out of the fundamental alcove and their words ``[gamma]``.

No geometry is stored.  For ``x = s_{i_1} ... s_{i_l}`` the path runs from
the fundamental alcove to ``x^{-1}`` of it through the walls of the gallery
of ``x^{-1} = s_{i_l} ... s_{i_1}``: the wall crossed at step ``m`` is the
image of the ``m``-th simple wall under the prefix of that gallery.

A crossing ``(beta, k)`` records the wall ``{<beta, p> = k}`` oriented so
that ``beta`` points from the earlier alcove into the later one.  The word
attached to the path is ``[-beta_1, -k_1] ... [-beta_l, -k_l]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import affine_weyl as aw
from .affine_weyl import AffineRootLabel, AffineWeylElement
from .nichols import TensorElement
from .roots import Root, RootSystem


@dataclass(frozen=True)
class AlcovePath:
    target: AffineWeylElement
    word: tuple[int, ...]
    crossings: tuple[tuple[Root, int], ...]

    def __len__(self) -> int:
        return len(self.crossings)

    def to_json(self) -> list[dict]:
        return [{"beta": list(b), "k": k} for b, k in self.crossings]


def _outward_functional(system: RootSystem, i: int) -> tuple[Root, int]:
    # the fundamental alcove lies in {<beta, p> < k} for these walls
    if i == 0:
        return system.highest_root, 1
    return tuple(-c for c in system.roots[system.simple_indices[i - 1]]), 0


def _transport(x: AffineWeylElement, beta: Root, k: int) -> tuple[Root, int]:
    sys = x.system
    idx = sys.index(beta)
    return sys.roots[x.w.perm[idx]], k + sys.pairing_index(idx, x.lam)


def reduced_alcove_path(x: AffineWeylElement, word: Sequence[int] | None = None) -> AlcovePath:
    """Reduced path from the fundamental alcove to ``x^{-1}`` of it."""
    sys = x.system
    if word is None:
        word = aw.reduced_word(x)
    word = tuple(word)
    if len(word) != aw.length(x) or aw.from_word(sys, word) != x:
        raise ValueError("word is not a reduced word of x")
    prefix = aw.identity(sys)
    crossings = []
    for j in reversed(word):
        beta, k = _outward_functional(sys, j)
        crossings.append(_transport(prefix, beta, k))
        prefix = prefix * aw.simple_affine_reflection(sys, j)
    return AlcovePath(x, word, tuple(crossings))


def alcove_path_to(y: AffineWeylElement, word: Sequence[int] | None = None) -> AlcovePath:
    """Reduced path from the fundamental alcove to ``y`` of it, i.e. the path of ``y^{-1}``."""
    return reduced_alcove_path(y.inverse(), word)


def crossing_labels(path: AlcovePath) -> list[AffineRootLabel]:
    sys = path.target.system
    return [AffineRootLabel.make(sys, tuple(-c for c in b), -k) for b, k in path.crossings]


def gamma_word(path: AlcovePath) -> TensorElement:
    """``[-beta_1, -k_1] ... [-beta_l, -k_l]``; the scalar 1 for the empty path."""
    return TensorElement.word(path.target.system, crossing_labels(path))


def bracket(x: AffineWeylElement, word: Sequence[int] | None = None) -> TensorElement:
    """``[x]``: the word of a reduced path to ``x^{-1}`` of the fundamental alcove."""
    return gamma_word(reduced_alcove_path(x, word))


def _alcove_value(system: RootSystem, beta: Root, k: int) -> Fraction:
    # value of <beta, p> - k at the interior point with <alpha_i, p> = 1/h
    return Fraction(sum(beta), system.coxeter_number) - k


def separates(x: AffineWeylElement, beta: Root, k: int) -> bool:
    """Whether ``{<beta, p> = k}`` separates the fundamental alcove from ``x^{-1}`` of it."""
    sys = x.system
    here = _alcove_value(sys, beta, k)
    b2, k2 = _transport(x, beta, k)
    there = _alcove_value(sys, b2, k2)
    return (here > 0) != (there > 0)


def replay_word(path: AlcovePath) -> list[int]:
    """Recover the generator sequence from the crossings alone.

    Each crossing, pulled back by the reflections already crossed, must be a
    wall of the fundamental alcove; the walls give the gallery of ``x^{-1}``
    and its reverse is a reduced word of ``x``.
    """
    sys = path.target.system
    walls = {_outward_functional(sys, i): i for i in range(sys.rank + 1)}
    back = aw.identity(sys)
    gallery = []
    for beta, k in path.crossings:
        b, kk = _transport(back, beta, k)
        if (b, kk) not in walls:
            raise ValueError(f"crossing {(beta, k)} does not pull back to a simple wall")
        i = walls[(b, kk)]
        gallery.append(i)
        back = aw.simple_affine_reflection(sys, i) * back
    return gallery[::-1]
