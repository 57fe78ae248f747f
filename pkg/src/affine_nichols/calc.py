"""A small expression language over one root system.

Grammar::

    expr    := term (('+' | '-') term)*
    term    := unary ('*' unary)*
    unary   := '-' unary | postfix
    postfix := atom ('.' dop)*
    dop     := 'Dword' '(' int (',' int)* ')' | 'D' label | 'D' int
    atom    := number | wN | tauN | tau[N] | label
             | dN(expr) | d[N](expr) | sN(expr) | gamma(elem) | zeroB(expr) | sym(expr)
             | '(' expr ')' | atom '^' int
    elem    := t[c1 c2 ...] | t[i] | word(i, j, ...)
    label   := '[' ij (',' k)? ']' | '[' i j (',' k)? ']' | '[a:' c1 c2 ... (',' k)? ']' | '[theta' (',' k)? ']'

``wN`` are fundamental weights, ``tauN`` nil-Hecke generators, ``dN`` divided
differences (``d0`` is ``-d_theta``) and ``sN`` simple reflections on S.
Labels are letters of the tensor model; ``*`` concatenates them.  ``x . D``
is the right action of a braided differential.  ``t[i]`` is the translation by
the i-th simple coroot and ``gamma(y)`` is the word of the path from the
fundamental alcove to ``y`` of it.
"""

from __future__ import annotations

import re
from fractions import Fraction

from . import affine_weyl as aw
from . import alcove, nichols as nc, nilhecke as nh
from .nichols import BAfSElement, TensorElement
from .nilhecke import NilHeckeElement
from .poly import Polynomial, format_polynomial, simple_divided_difference, weyl_act
from .roots import RootSystem, type_a_rank, type_a_root


class CalcError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


_TOKENS = re.compile(r"""
    (?P<ws>\s+)
  | (?P<label>\[[^\[\]]*\])
  | (?P<num>\d+(?:/\d+)?)
  | (?P<name>[A-Za-z]+)
  | (?P<op>[-+*^().,\[\]])
""", re.VERBOSE)


def tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKENS.match(text, pos)
        if not m:
            raise CalcError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            out.append((kind, m.group(), pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, system: RootSystem, text: str):
        self.sys = system
        self.toks = tokenize(text)
        self.i = 0

    # -- token helpers
    def peek(self):
        return self.toks[self.i]

    def take(self, value: str | None = None, kind: str | None = None):
        tok = self.toks[self.i]
        if (value is not None and tok[1] != value) or (kind is not None and tok[0] != kind):
            want = value or kind
            raise CalcError(f"expected {want!r}, found {tok[1] or 'end of input'!r}", tok[2])
        self.i += 1
        return tok

    def parse(self):
        v = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise CalcError(f"unexpected {tok[1]!r}", tok[2])
        return v

    # -- grammar
    def expr(self):
        v = self.term()
        while self.peek()[1] in ("+", "-"):
            _, op, pos = self.take()
            w = self.term()
            v = _binary(self.sys, v, w, op, pos)
        return v

    def term(self):
        v = self.unary()
        while self.peek()[1] == "*":
            pos = self.take()[2]
            v = _binary(self.sys, v, self.unary(), "*", pos)
        return v

    def unary(self):
        if self.peek()[1] == "-":
            pos = self.take()[2]
            return _binary(self.sys, Fraction(-1), self.unary(), "*", pos)
        return self.postfix()

    def postfix(self):
        v = self.power()
        while self.peek()[1] == ".":
            pos = self.take()[2]
            v = self.dop(v, pos)
        return v

    def power(self):
        v = self.atom()
        while self.peek()[1] == "^":
            pos = self.take()[2]
            e = int(self.take(kind="num")[1])
            base = v
            acc = Fraction(1)
            for _ in range(e):
                acc = _binary(self.sys, acc, base, "*", pos)
            v = acc
        return v

    def dop(self, v, pos):
        if not isinstance(v, TensorElement):
            raise CalcError("differentials act on tensor elements", pos)
        name = self.take(kind="name")
        if name[1] == "Dword":
            for i in self.int_list():
                v = nc.generator_differential(v, self._gen(i, name[2]))
            return v
        if name[1] == "D":
            tok = self.peek()
            if tok[0] == "label":
                self.i += 1
                return nc.differential(v, self.label(tok))
            i = int(self.take(kind="num")[1])
            return nc.generator_differential(v, self._gen(i, tok[2]))
        raise CalcError(f"unknown differential {name[1]!r}", name[2])

    def int_list(self):
        self.take("(")
        out = [self._int()]
        while self.peek()[1] == ",":
            self.take(",")
            out.append(self._int())
        self.take(")")
        return out

    def _int(self):
        neg = False
        if self.peek()[1] == "-":
            self.take("-")
            neg = True
        v = int(self.take(kind="num")[1])
        return -v if neg else v

    def _gen(self, i, pos):
        if not 0 <= i <= self.sys.rank:
            raise CalcError(f"generator index {i} out of range", pos)
        return i

    def _indexed(self, prefix):
        """Index following ``w`` / ``tau`` / ``d`` / ``s``, written ``N`` or ``[N]``."""
        tok = self.peek()
        if tok[0] == "num":
            self.i += 1
            return int(tok[1])
        if tok[0] == "label":
            self.i += 1
            body = tok[1][1:-1].strip()
            if body.isdigit():
                return int(body)
        raise CalcError(f"{prefix} needs an index", tok[2])

    def atom(self):
        tok = self.peek()
        kind, text, pos = tok
        if kind == "num":
            self.i += 1
            return Fraction(text)
        if text == "(":
            self.i += 1
            v = self.expr()
            self.take(")")
            return v
        if kind == "label":
            self.i += 1
            return TensorElement.letter(self.sys, self.label(tok))
        if kind != "name":
            raise CalcError(f"unexpected {text or 'end of input'!r}", pos)
        self.i += 1
        if text in ("gamma", "zeroB", "sym"):
            self.take("(")
            if text == "gamma":
                y = self.element()
                self.take(")")
                return alcove.gamma_word(alcove.alcove_path_to(y))
            v = self.expr()
            self.take(")")
            if not isinstance(v, TensorElement):
                raise CalcError(f"{text} needs a tensor element", pos)
            if text == "zeroB":
                return "true" if nc.is_zero_in_B(v) else "false"
            return nc.symmetrize(v)
        if text in ("tau", "w", "d", "s"):
            return self._apply_named(text, self._indexed(text), pos)
        raise CalcError(f"unknown name {text!r}", pos)

    def _apply_named(self, prefix, idx, pos):
        n = self.sys.rank
        if prefix == "w":
            if not 1 <= idx <= n:
                raise CalcError(f"weight index {idx} out of range", pos)
            return Polynomial.variable(n, idx - 1)
        idx = self._gen(idx, pos)
        if prefix == "tau":
            return NilHeckeElement.tau(self.sys, idx)
        self.take("(")
        arg = self.expr()
        self.take(")")
        f = _as_poly(self.sys, arg, pos)
        if prefix == "d":
            return simple_divided_difference(self.sys, idx, f)
        return weyl_act(self.sys, aw.simple_affine_reflection(self.sys, idx), f)

    def element(self):
        tok = self.take(kind="name")
        if tok[1] == "t":
            body = self.take(kind="label")
            coords = [int(c) for c in re.split(r"[\s,]+", body[1][1:-1].strip()) if c]
            if len(coords) == 1 and self.sys.rank > 1:
                i = coords[0]
                if not 1 <= i <= self.sys.rank:
                    raise CalcError(f"coroot index {i} out of range", body[2])
                coords = [int(j == i - 1) for j in range(self.sys.rank)]
            if len(coords) != self.sys.rank:
                raise CalcError("translation needs one index or a full coroot vector", body[2])
            return aw.translation(self.sys, coords)
        if tok[1] == "word":
            return aw.from_word(self.sys, [self._gen(i, tok[2]) for i in self.int_list()])
        raise CalcError(f"expected an affine Weyl element, found {tok[1]!r}", tok[2])

    def label(self, tok):
        body, pos = tok[1][1:-1].strip(), tok[2]
        parts = [p.strip() for p in body.split(",")]
        if len(parts) > 2 or not parts[0]:
            raise CalcError(f"malformed label {tok[1]!r}", pos)
        level = int(parts[1]) if len(parts) == 2 else 0
        head = parts[0]
        if head == "theta":
            root = self.sys.highest_root
        elif head.startswith("a:"):
            root = tuple(int(c) for c in head[2:].split())
        else:
            if type_a_rank(self.sys) is None:
                raise CalcError("epsilon labels need a type A system", pos)
            digits = head.split() if " " in head else list(head)
            if len(digits) != 2:
                raise CalcError(f"malformed label {tok[1]!r}", pos)
            try:
                root = type_a_root(self.sys, int(digits[0]), int(digits[1]))
            except ValueError as exc:
                raise CalcError(str(exc), pos) from None
        if not self.sys.is_root(root):
            raise CalcError(f"{list(root)} is not a root", pos)
        return nc.label(self.sys, root, level)


def _as_poly(system, v, pos) -> Polynomial:
    if isinstance(v, Fraction):
        return Polynomial.constant(system.rank, v)
    if isinstance(v, Polynomial):
        return v
    raise CalcError("expected a polynomial", pos)


def _rank(v) -> int:
    order = (Fraction, Polynomial, NilHeckeElement, TensorElement, BAfSElement)
    for i, t in enumerate(order):
        if isinstance(v, t):
            return i
    return -1


def _binary(system, a, b, op, pos):
    if isinstance(a, str) or isinstance(b, str):
        raise CalcError("truth values cannot be combined", pos)
    ta, tb = _rank(a), _rank(b)
    nilhecke_side = NilHeckeElement in (type(a), type(b))
    tensor_side = TensorElement in (type(a), type(b)) or BAfSElement in (type(a), type(b))
    if nilhecke_side and tensor_side:
        raise CalcError("cannot mix nil-Hecke and tensor elements", pos)
    if ta <= 1 and tb <= 1:
        if ta == 0 and tb == 0:
            return a + b if op == "+" else a - b if op == "-" else a * b
        a, b = _as_poly(system, a, pos), _as_poly(system, b, pos)
        return a + b if op == "+" else a - b if op == "-" else a * b
    if nilhecke_side:
        a, b = nh._as_nh(system, a), nh._as_nh(system, b)
        return a + b if op == "+" else a - b if op == "-" else a * b
    # tensor side
    if op == "*" and isinstance(a, Fraction):
        return b * a
    if op == "*" and isinstance(b, Fraction):
        return a * b
    if isinstance(a, TensorElement) and isinstance(b, TensorElement):
        return a + b if op == "+" else a - b if op == "-" else a * b
    a = _as_bafs(system, a)
    b = _as_bafs(system, b)
    return a + b if op == "+" else a - b if op == "-" else a * b


def _as_bafs(system, v):
    if isinstance(v, Fraction):
        v = Polynomial.constant(system.rank, v)
    return nc._as_bafs(system, v)


def evaluate(system: RootSystem, text: str):
    return _Parser(system, text).parse()


def render(v) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, Polynomial):
        return format_polynomial(v)
    if isinstance(v, NilHeckeElement):
        return nh.format_nilhecke(v)
    if isinstance(v, TensorElement):
        return nc.format_tensor(v)
    return str(v)


def calc(system: RootSystem, text: str) -> str:
    return render(evaluate(system, text))
