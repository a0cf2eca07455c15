"""Subtraction-free rational expressions and their max-plus shadows.

The rational grammar allows only ``+``, ``*``, ``/`` and integer powers over
positive integer literals, so every expression denotes a strictly positive
function on positive inputs.  The ultra-discretization pass replaces
(*, /, +) by (+, -, max) and sends positive literals to 0; the result is a
piecewise-linear map on integer points.  Because two subtraction-free
expressions that agree as rational functions have the same tropical limit,
the pass is well defined on functions, which is what the cross-checking
suites rely on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Var", "Num", "Add", "Mul", "Div", "Pow",
    "TVar", "TNum", "TAdd", "TSub", "TMax", "TScale",
    "ExprSyntaxError", "parse", "to_text", "free_vars", "substitute",
    "eval_rational", "compile_rational", "tropicalize",
    "trop_to_text", "trop_free_vars", "eval_trop", "compile_trop",
    "trop_equal_on_box",
]


# --------------------------------------------------------------------------
# rational ASTs

@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Num:
    value: int  # strictly positive


@dataclass(frozen=True)
class Add:
    args: tuple  # >= 2 entries, none of them Add


@dataclass(frozen=True)
class Mul:
    args: tuple  # >= 2 entries, none of them Mul


@dataclass(frozen=True)
class Div:
    num: object
    den: object


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int  # nonzero, possibly negative


# --------------------------------------------------------------------------
# tropical ASTs

@dataclass(frozen=True)
class TVar:
    name: str


@dataclass(frozen=True)
class TNum:
    value: int


@dataclass(frozen=True)
class TAdd:
    args: tuple


@dataclass(frozen=True)
class TSub:
    pos: object
    neg: object


@dataclass(frozen=True)
class TMax:
    args: tuple


@dataclass(frozen=True)
class TScale:
    coeff: int
    arg: object


# --------------------------------------------------------------------------
# parsing

class ExprSyntaxError(ValueError):
    pass


def _tokenize(text):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(("ident", text[i:j], i))
            i = j
            continue
        if ch in "+*/^()-":
            toks.append((ch, ch, i))
            i += 1
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r} at position {i}")
    toks.append(("end", "", n))
    return toks


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def take(self, kind=None):
        tok = self.toks[self.pos]
        if kind is not None and tok[0] != kind:
            raise ExprSyntaxError(
                f"expected {kind} at position {tok[2]}, found {tok[1]!r}")
        self.pos += 1
        return tok

    def parse_expr(self):
        args = [self.parse_term()]
        while self.peek()[0] == "+":
            self.take()
            args.append(self.parse_term())
        return args[0] if len(args) == 1 else Add(tuple(args))

    def parse_term(self):
        e = self.parse_factor()
        while self.peek()[0] in ("*", "/"):
            op = self.take()[0]
            f = self.parse_factor()
            if op == "*":
                if isinstance(e, Mul):
                    e = Mul(e.args + (f,))
                else:
                    e = Mul((e, f))
            else:
                e = Div(e, f)
        return e

    def parse_factor(self):
        base = self.parse_base()
        if self.peek()[0] == "^":
            self.take()
            sign = 1
            if self.peek()[0] == "-":
                self.take()
                sign = -1
            tok = self.take("int")
            exp = sign * int(tok[1])
            if exp == 0:
                raise ExprSyntaxError(
                    f"zero exponent at position {tok[2]} not allowed")
            return Pow(base, exp)
        return base

    def parse_base(self):
        kind, value, at = self.peek()
        if kind == "ident":
            self.take()
            return Var(value)
        if kind == "int":
            self.take()
            n = int(value)
            if n <= 0:
                raise ExprSyntaxError(
                    f"literal at position {at} must be positive")
            return Num(n)
        if kind == "(":
            self.take()
            e = self.parse_expr()
            self.take(")")
            return e
        if kind == "-":
            raise ExprSyntaxError(
                f"subtraction at position {at}: the grammar is "
                "subtraction-free")
        raise ExprSyntaxError(f"unexpected {value!r} at position {at}")


def parse(text: str):
    p = _Parser(text)
    e = p.parse_expr()
    kind, value, at = p.peek()
    if kind != "end":
        raise ExprSyntaxError(f"trailing input {value!r} at position {at}")
    return e


# --------------------------------------------------------------------------
# printing (canonical: parse(to_text(e)) == e)

def to_text(e) -> str:
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Add):
        return " + ".join(to_text(a) for a in e.args)
    if isinstance(e, Mul):
        parts = []
        for i, a in enumerate(e.args):
            # a Div anywhere but the head would re-associate on re-parse
            if isinstance(a, Add) or (isinstance(a, Div) and i > 0):
                parts.append("(" + to_text(a) + ")")
            else:
                parts.append(to_text(a))
        return "*".join(parts)
    if isinstance(e, Div):
        num = to_text(e.num)
        if isinstance(e.num, Add):
            num = "(" + num + ")"
        den = to_text(e.den)
        if isinstance(e.den, (Add, Mul, Div)):
            den = "(" + den + ")"
        return num + "/" + den
    if isinstance(e, Pow):
        base = to_text(e.base)
        if not isinstance(e.base, (Var, Num)):
            base = "(" + base + ")"
        return f"{base}^{e.exp}"
    raise TypeError(f"not a rational expression: {e!r}")


def free_vars(e):
    if isinstance(e, Var):
        return frozenset((e.name,))
    if isinstance(e, Num):
        return frozenset()
    if isinstance(e, (Add, Mul)):
        out = frozenset()
        for a in e.args:
            out |= free_vars(a)
        return out
    if isinstance(e, Div):
        return free_vars(e.num) | free_vars(e.den)
    if isinstance(e, Pow):
        return free_vars(e.base)
    raise TypeError(f"not a rational expression: {e!r}")


def substitute(e, mapping):
    """Replace variables by expressions; mapping is name -> Expr."""
    if isinstance(e, Var):
        return mapping.get(e.name, e)
    if isinstance(e, Num):
        return e
    if isinstance(e, Add):
        args = []
        for a in e.args:
            s = substitute(a, mapping)
            if isinstance(s, Add):
                args.extend(s.args)
            else:
                args.append(s)
        return Add(tuple(args))
    if isinstance(e, Mul):
        args = []
        for a in e.args:
            s = substitute(a, mapping)
            if isinstance(s, Mul):
                args.extend(s.args)
            else:
                args.append(s)
        return Mul(tuple(args))
    if isinstance(e, Div):
        return Div(substitute(e.num, mapping), substitute(e.den, mapping))
    if isinstance(e, Pow):
        return Pow(substitute(e.base, mapping), e.exp)
    raise TypeError(f"not a rational expression: {e!r}")


# --------------------------------------------------------------------------
# rational evaluation

def eval_rational(e, env) -> Fraction:
    """Exact value at an assignment of positive rationals to variables."""
    if isinstance(e, Var):
        try:
            return Fraction(env[e.name])
        except KeyError:
            raise ValueError(f"unbound variable {e.name!r}") from None
    if isinstance(e, Num):
        return Fraction(e.value)
    if isinstance(e, Add):
        return sum(eval_rational(a, env) for a in e.args)
    if isinstance(e, Mul):
        out = Fraction(1)
        for a in e.args:
            out *= eval_rational(a, env)
        return out
    if isinstance(e, Div):
        return eval_rational(e.num, env) / eval_rational(e.den, env)
    if isinstance(e, Pow):
        return eval_rational(e.base, env) ** e.exp
    raise TypeError(f"not a rational expression: {e!r}")


def _py_rational(e):
    if isinstance(e, Var):
        return f"__env[{e.name!r}]"
    if isinstance(e, Num):
        return f"__F({e.value})"
    if isinstance(e, Add):
        return "(" + " + ".join(_py_rational(a) for a in e.args) + ")"
    if isinstance(e, Mul):
        return "(" + " * ".join(_py_rational(a) for a in e.args) + ")"
    if isinstance(e, Div):
        return f"({_py_rational(e.num)} / {_py_rational(e.den)})"
    if isinstance(e, Pow):
        return f"({_py_rational(e.base)} ** ({e.exp}))"
    raise TypeError(f"not a rational expression: {e!r}")


def compile_rational(e):
    """Callable env -> Fraction.  Env values must be Fractions."""
    src = "lambda __env: " + _py_rational(e)
    return eval(src, {"__F": Fraction})


# --------------------------------------------------------------------------
# ultra-discretization

def tropicalize(e):
    if isinstance(e, Var):
        return TVar(e.name)
    if isinstance(e, Num):
        return TNum(0)
    if isinstance(e, Add):
        return TMax(tuple(tropicalize(a) for a in e.args))
    if isinstance(e, Mul):
        args = []
        for a in e.args:
            t = tropicalize(a)
            if isinstance(t, TNum) and t.value == 0:
                continue
            if isinstance(t, TAdd):
                args.extend(t.args)
            else:
                args.append(t)
        if not args:
            return TNum(0)
        if len(args) == 1:
            return args[0]
        return TAdd(tuple(args))
    if isinstance(e, Div):
        return TSub(tropicalize(e.num), tropicalize(e.den))
    if isinstance(e, Pow):
        t = tropicalize(e.base)
        if e.exp == 1:
            return t
        return TScale(e.exp, t)
    raise TypeError(f"not a rational expression: {e!r}")


def trop_free_vars(t):
    if isinstance(t, TVar):
        return frozenset((t.name,))
    if isinstance(t, TNum):
        return frozenset()
    if isinstance(t, (TAdd, TMax)):
        out = frozenset()
        for a in t.args:
            out |= trop_free_vars(a)
        return out
    if isinstance(t, TSub):
        return trop_free_vars(t.pos) | trop_free_vars(t.neg)
    if isinstance(t, TScale):
        return trop_free_vars(t.arg)
    raise TypeError(f"not a tropical expression: {t!r}")


def eval_trop(t, env) -> int:
    if isinstance(t, TVar):
        try:
            return env[t.name]
        except KeyError:
            raise ValueError(f"unbound variable {t.name!r}") from None
    if isinstance(t, TNum):
        return t.value
    if isinstance(t, TAdd):
        return sum(eval_trop(a, env) for a in t.args)
    if isinstance(t, TSub):
        return eval_trop(t.pos, env) - eval_trop(t.neg, env)
    if isinstance(t, TMax):
        return max(eval_trop(a, env) for a in t.args)
    if isinstance(t, TScale):
        return t.coeff * eval_trop(t.arg, env)
    raise TypeError(f"not a tropical expression: {t!r}")


def trop_to_text(t) -> str:
    def atom(u):
        s = trop_to_text(u)
        if isinstance(u, (TVar, TNum, TMax)):
            return s
        return "(" + s + ")"

    if isinstance(t, TVar):
        return t.name
    if isinstance(t, TNum):
        return str(t.value)
    if isinstance(t, TAdd):
        return " + ".join(atom(a) for a in t.args)
    if isinstance(t, TSub):
        return atom(t.pos) + " - " + atom(t.neg)
    if isinstance(t, TMax):
        return "max(" + ", ".join(trop_to_text(a) for a in t.args) + ")"
    if isinstance(t, TScale):
        return f"{t.coeff}*" + atom(t.arg)
    raise TypeError(f"not a tropical expression: {t!r}")


def _py_trop(t):
    if isinstance(t, TVar):
        return f"__env[{t.name!r}]"
    if isinstance(t, TNum):
        return str(t.value)
    if isinstance(t, TAdd):
        return "(" + " + ".join(_py_trop(a) for a in t.args) + ")"
    if isinstance(t, TSub):
        return f"({_py_trop(t.pos)} - {_py_trop(t.neg)})"
    if isinstance(t, TMax):
        return "max(" + ", ".join(_py_trop(a) for a in t.args) + ")"
    if isinstance(t, TScale):
        return f"({t.coeff} * {_py_trop(t.arg)})"
    raise TypeError(f"not a tropical expression: {t!r}")


def compile_trop(t):
    """Callable env -> int over integer assignments."""
    src = "lambda __env: " + _py_trop(t)
    return eval(src, {})


def trop_equal_on_box(t1, t2, box, samples=1000, seed=0):
    """Compare two piecewise-linear expressions on an integer box.

    box is (lo, hi), applied to every variable of either expression.  When
    the box is small enough it is swept exhaustively; otherwise `samples`
    uniform points are drawn with the given seed.  Returns a report dict
    with the first disagreement as a witness, if any.
    """
    import itertools
    import random

    lo, hi = box
    names = sorted(trop_free_vars(t1) | trop_free_vars(t2))
    f1, f2 = compile_trop(t1), compile_trop(t2)
    width = hi - lo + 1
    report = {"equal": True, "checked": 0, "witness": None,
              "seed": seed, "box": [lo, hi]}

    def check(env):
        report["checked"] += 1
        if f1(env) != f2(env):
            report["equal"] = False
            report["witness"] = dict(env)
            return False
        return True

    if names and width ** len(names) <= samples:
        for values in itertools.product(range(lo, hi + 1), repeat=len(names)):
            if not check(dict(zip(names, values))):
                return report
    else:
        rng = random.Random(seed)
        for _ in range(samples):
            env = {name: rng.randint(lo, hi) for name in names}
            if not check(env):
                return report
    return report
