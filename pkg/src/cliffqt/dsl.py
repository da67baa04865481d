"""Expression language over typed symbolic multivectors.

Grammar::

    program := (decl ';')* expr
    decl    := 'let' IDENT ':' typeset
    typeset := [0123]+ ('+' 'i' [0123]+)? | 'i' [0123]+
    expr    := prod (('+'|'-') prod)*
    prod    := unary ('*' unary)*
    unary   := rational ['*'] unary | 'i' ['*'] unary | '-' unary | atom
    atom    := IDENT | '(' expr ')' | '[' expr ',' expr ']' | '{' expr ',' expr '}'
             | ('rev'|'gri'|'conj'|'phc') '(' expr ')'

``rev``/``gri``/``conj``/``phc`` are reversion, grade involution, complex
conjugation and pseudo-Hermitian conjugation; compositions nest, e.g.
``gri(rev(x))``.  Undeclared symbols get the full TypeSet.

Type inference runs two passes.  The compositional pass folds the closure
tables over the tree.  The refinement pass rewrites the expression under
every conjugation of the field (pushing conjugations down to the symbols,
reversing factor order under anti-automorphisms, conjugating scalars under
antilinear operations) and, whenever the normal form reproduces the
expression or its negation, intersects with the matching +-1 eigenspace.
That second pass is what recovers the U*rev(U)-style identities that no
per-node rule can see.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import (
    COMPLEX,
    EXACT,
    FLOAT,
    REAL,
    Multivector,
    Signature,
    anticommutator,
    commutator,
)
from .errors import AlgebraError, BindingError, ParseError
from .mvtext import format_mv
from .qtype import (
    TypeSet,
    anticommutator_type,
    classify_by_rank,
    commutator_type,
    conjugation_bits,
    eigenspace,
    member,
    parse_typeset,
    product_type,
)

# ------------------------------------------------------------------ AST

class Expr:
    __slots__ = ()


@dataclass(frozen=True)
class Sym(Expr):
    name: str
    pos: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Add(Expr):
    left: Expr
    right: Expr
    pos: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Neg(Expr):
    child: Expr
    pos: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class ScalarMul(Expr):
    factor: Fraction
    child: Expr
    pos: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class IMul(Expr):
    child: Expr
    pos: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Prod(Expr):
    left: Expr
    right: Expr
    pos: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Comm(Expr):
    left: Expr
    right: Expr
    pos: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class AntiComm(Expr):
    left: Expr
    right: Expr
    pos: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Conj(Expr):
    op: str  # rev | gri | conj | phc
    child: Expr
    pos: tuple = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class TypeEnv:
    field: str
    types: dict

    def lookup(self, name: str) -> TypeSet:
        try:
            return self.types[name]
        except KeyError:
            raise BindingError(f"unbound symbol {name!r}") from None


def free_symbols(expr: Expr) -> set[str]:
    if isinstance(expr, Sym):
        return {expr.name}
    out: set[str] = set()
    for attr in ("left", "right", "child"):
        sub = getattr(expr, attr, None)
        if sub is not None:
            out |= free_symbols(sub)
    return out


# ------------------------------------------------------------------ lexer / parser

_KEYWORDS = {"let", "rev", "gri", "conj", "phc", "i"}
_CONJ_NAMES = {"rev", "gri", "conj", "phc"}
_PUNCT = "+-*/()[]{},:;"


def _tokenize(text: str):
    tokens = []
    i = 0
    line, col = 1, 1

    def advance(j):
        nonlocal i, line, col
        for k in range(i, j):
            if text[k] == "\n":
                line += 1
                col = 1
            else:
                col += 1
        i = j

    while i < len(text):
        ch = text[i]
        if ch.isspace():
            advance(i + 1)
            continue
        start = (line, col)
        if ch.isdigit():
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            if j < len(text) and text[j] == "." and j + 1 < len(text) and text[j + 1].isdigit():
                j += 1
                while j < len(text) and text[j].isdigit():
                    j += 1
                tokens.append(("DECIMAL", text[i:j], start))
            else:
                tokens.append(("INT", text[i:j], start))
            advance(j)
        elif ch.isalpha() or ch == "_":
            j = i + 1
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("IDENT", text[i:j], start))
            advance(j)
        elif ch in _PUNCT:
            tokens.append((ch, ch, start))
            advance(i + 1)
        else:
            raise ParseError(f"malformed token {ch!r}", line, col)
    tokens.append(("EOF", None, (line, col)))
    return tokens


class _DslParser:
    def __init__(self, text: str, field: str):
        self.toks = _tokenize(text)
        self.i = 0
        self.field = field
        self.types: dict[str, TypeSet] = {}
        self.declared: set[str] = set()

    def _peek(self):
        return self.toks[self.i]

    def _next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def _expect(self, kind):
        tok = self._next()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, got {tok[1]!r}", *tok[2])
        return tok

    def _fail(self, msg, tok=None):
        tok = tok or self._peek()
        raise ParseError(msg, *tok[2])

    def parse_program(self) -> tuple[TypeEnv, Expr]:
        while self._peek()[0] == "IDENT" and self._peek()[1] == "let":
            self._decl()
        expr = self._expr()
        tok = self._peek()
        if tok[0] != "EOF":
            self._fail(f"unexpected trailing input {tok[1]!r}")
        for name in sorted(free_symbols(expr)):
            self.types.setdefault(name, TypeSet.full(self.field))
        return TypeEnv(self.field, self.types), expr

    def _decl(self):
        self._next()  # let
        kind, name, pos = self._next()
        if kind != "IDENT" or name in _KEYWORDS:
            raise ParseError("expected a symbol name after 'let'", *pos)
        if name in self.declared:
            raise ParseError(f"duplicate declaration of {name!r}", *pos)
        self._expect(":")
        tset = self._typeset()
        self._expect(";")
        self.declared.add(name)
        self.types[name] = tset

    def _typeset(self) -> TypeSet:
        parts = []
        tok = self._next()
        if tok[0] == "INT":
            parts.append(("", tok))
            if self._peek()[0] == "+":
                self._next()
                itok = self._next()
                parts.append(("i", itok))
        elif tok[0] == "IDENT" and tok[1].startswith("i"):
            parts.append(("i", (tok[0], tok[1][1:], tok[2])))
        else:
            raise ParseError("expected a type set like 01 or 01+i23", *tok[2])
        text = ""
        for prefix, (kind, lexeme, pos) in parts:
            if prefix == "i" and kind == "IDENT" and lexeme.startswith("i"):
                lexeme = lexeme[1:]
            if kind not in ("INT", "IDENT") or not lexeme or any(c not in "0123" for c in lexeme):
                raise ParseError("type set digits must be 0-3", *pos)
            text += ("+" if text else "") + prefix + lexeme
        try:
            return parse_typeset(text, self.field)
        except AlgebraError as exc:
            raise ParseError(str(exc), *parts[0][1][2]) from None

    def _expr(self) -> Expr:
        node = self._prod()
        while self._peek()[0] in ("+", "-"):
            kind, _, pos = self._next()
            rhs = self._prod()
            if kind == "-":
                rhs = Neg(rhs, pos=pos)
            node = Add(node, rhs, pos=pos)
        return node

    def _prod(self) -> Expr:
        node = self._unary()
        while self._peek()[0] == "*":
            _, _, pos = self._next()
            node = Prod(node, self._unary(), pos=pos)
        return node

    def _unary(self) -> Expr:
        kind, lexeme, pos = self._peek()
        if kind in ("INT", "DECIMAL"):
            self._next()
            if kind == "INT" and self._peek()[0] == "/":
                self._next()
                dkind, dlex, dpos = self._next()
                if dkind != "INT":
                    raise ParseError("fraction denominator must be an integer", *dpos)
                if int(dlex) == 0:
                    raise ParseError("zero denominator", *dpos)
                factor = Fraction(int(lexeme), int(dlex))
            else:
                factor = Fraction(lexeme)
            if self._peek()[0] == "*":
                self._next()
            return ScalarMul(factor, self._unary(), pos=pos)
        if kind == "IDENT" and lexeme == "i":
            self._next()
            if self.field != COMPLEX:
                raise ParseError("'i' needs the complex field", *pos)
            if self._peek()[0] == "*":
                self._next()
            return IMul(self._unary(), pos=pos)
        if kind == "-":
            self._next()
            return Neg(self._unary(), pos=pos)
        return self._atom()

    def _atom(self) -> Expr:
        kind, lexeme, pos = self._next()
        if kind == "IDENT":
            if lexeme in _CONJ_NAMES:
                if lexeme in ("conj", "phc") and self.field != COMPLEX:
                    raise ParseError(f"{lexeme!r} needs the complex field", *pos)
                self._expect("(")
                inner = self._expr()
                self._expect(")")
                return Conj(lexeme, inner, pos=pos)
            if lexeme in _KEYWORDS:
                raise ParseError(f"unexpected keyword {lexeme!r}", *pos)
            if self._peek()[0] == "(":
                raise ParseError(f"unknown conjugation name {lexeme!r}", *pos)
            return Sym(lexeme, pos=pos)
        if kind == "(":
            inner = self._expr()
            self._expect(")")
            return inner
        if kind == "[":
            left = self._expr()
            self._expect(",")
            right = self._expr()
            self._expect("]")
            return Comm(left, right, pos=pos)
        if kind == "{":
            left = self._expr()
            self._expect(",")
            right = self._expr()
            self._expect("}")
            return AntiComm(left, right, pos=pos)
        raise ParseError(f"unexpected token {lexeme!r}", *pos)


def parse_program(text: str, field: str = REAL) -> tuple[TypeEnv, Expr]:
    """Parse declarations plus one expression; undeclared symbols get the full set."""
    return _DslParser(text, field).parse_program()


def parse_expr(text: str, field: str = REAL) -> tuple[TypeEnv, Expr]:
    return parse_program(text, field)


# ------------------------------------------------------------------ formatting

def format_expr(expr: Expr, prec: int = 0) -> str:
    if isinstance(expr, Sym):
        return expr.name
    if isinstance(expr, Conj):
        return f"{expr.op}({format_expr(expr.child)})"
    if isinstance(expr, Comm):
        return f"[{format_expr(expr.left)}, {format_expr(expr.right)}]"
    if isinstance(expr, AntiComm):
        return f"{{{format_expr(expr.left)}, {format_expr(expr.right)}}}"
    if isinstance(expr, Add):
        if isinstance(expr.right, Neg):
            text = f"{format_expr(expr.left, 0)} - {format_expr(expr.right.child, 2)}"
        else:
            text = f"{format_expr(expr.left, 0)} + {format_expr(expr.right, 1)}"
        return f"({text})" if prec > 0 else text
    if isinstance(expr, Prod):
        text = f"{format_expr(expr.left, 1)}*{format_expr(expr.right, 2)}"
        return f"({text})" if prec > 1 else text
    if isinstance(expr, Neg):
        return f"-{format_expr(expr.child, 2)}"
    if isinstance(expr, ScalarMul):
        q = expr.factor
        body = f"{q}*{format_expr(expr.child, 2)}"
        return body if q >= 0 else f"-{-q}*{format_expr(expr.child, 2)}"
    if isinstance(expr, IMul):
        return f"i*{format_expr(expr.child, 2)}"
    raise TypeError(f"not an Expr: {expr!r}")


def format_program(env: TypeEnv, expr: Expr) -> str:
    decls = "".join(f"let {name}:{tset}; " for name, tset in env.types.items())
    return decls + format_expr(expr)


# ------------------------------------------------------------------ normal form

# A canonical form is a polynomial: {monomial: (re, im)} with Fraction parts.
# A monomial is a tuple of factors, each ("sym", name, conj_bits) or
# ("comm"/"acomm", mono, mono).  Product factor order is preserved; comm
# operands are sorted with a sign flip, acomm operands are sorted freely.

_REV_BIT, _GRI_BIT, _CCONJ_BIT = 1, 2, 4
_ZERO = Fraction(0)
_ONE = (Fraction(1), _ZERO)


def _cmul(c1, c2):
    a, b = c1
    c, d = c2
    return (a * c - b * d, a * d + b * c)


def _poly_add(p1: dict, p2: dict) -> dict:
    out = dict(p1)
    for mono, c in p2.items():
        cur = out.get(mono)
        if cur is None:
            out[mono] = c
        else:
            re, im = cur[0] + c[0], cur[1] + c[1]
            if re == 0 and im == 0:
                del out[mono]
            else:
                out[mono] = (re, im)
    return out


def _poly_scale(p: dict, c) -> dict:
    if c[0] == 0 and c[1] == 0:
        return {}
    return {mono: _cmul(coef, c) for mono, coef in p.items()}


def _poly_neg(p: dict) -> dict:
    return {mono: (-re, -im) for mono, (re, im) in p.items()}


def _poly_mul(p1: dict, p2: dict) -> dict:
    out: dict = {}
    for m1, c1 in p1.items():
        for m2, c2 in p2.items():
            mono = m1 + m2
            c = _cmul(c1, c2)
            cur = out.get(mono)
            if cur is None:
                out[mono] = c
            else:
                re, im = cur[0] + c[0], cur[1] + c[1]
                if re == 0 and im == 0:
                    del out[mono]
                else:
                    out[mono] = (re, im)
    return out


def _poly_bracket(p1: dict, p2: dict, anti: bool) -> dict:
    out: dict = {}
    for m1, c1 in p1.items():
        k1 = repr(m1)
        for m2, c2 in p2.items():
            c = _cmul(c1, c2)
            k2 = repr(m2)
            if anti:
                mono = (("acomm", m1, m2) if k1 <= k2 else ("acomm", m2, m1),)
            else:
                if k1 == k2:
                    continue  # [A, A] = 0
                if k1 < k2:
                    mono = (("comm", m1, m2),)
                else:
                    mono = (("comm", m2, m1),)
                    c = (-c[0], -c[1])
            cur = out.get(mono)
            if cur is None:
                out[mono] = c
            else:
                re, im = cur[0] + c[0], cur[1] + c[1]
                if re == 0 and im == 0:
                    del out[mono]
                else:
                    out[mono] = (re, im)
    return out


def canonical_form(expr: Expr, conj: int = 0) -> dict:
    """Normal form of a conjugation applied to expr, conjugations at symbols.

    ``conj`` is a (rev, gri, conj) bit code; 0 normalizes expr itself.
    """
    if isinstance(expr, Sym):
        return {(("sym", expr.name, conj),): _ONE}
    if isinstance(expr, Conj):
        return canonical_form(expr.child, conj ^ conjugation_bits(expr.op))
    if isinstance(expr, Add):
        return _poly_add(canonical_form(expr.left, conj), canonical_form(expr.right, conj))
    if isinstance(expr, Neg):
        return _poly_neg(canonical_form(expr.child, conj))
    if isinstance(expr, ScalarMul):
        return _poly_scale(canonical_form(expr.child, conj), (Fraction(expr.factor), _ZERO))
    if isinstance(expr, IMul):
        # antilinear conjugations flip i
        unit = (_ZERO, Fraction(-1)) if conj & _CCONJ_BIT else (_ZERO, Fraction(1))
        return _poly_scale(canonical_form(expr.child, conj), unit)
    if isinstance(expr, Prod):
        lhs = canonical_form(expr.left, conj)
        rhs = canonical_form(expr.right, conj)
        if conj & _REV_BIT:
            return _poly_mul(rhs, lhs)
        return _poly_mul(lhs, rhs)
    if isinstance(expr, Comm):
        out = _poly_bracket(
            canonical_form(expr.left, conj), canonical_form(expr.right, conj), anti=False
        )
        return _poly_neg(out) if conj & _REV_BIT else out
    if isinstance(expr, AntiComm):
        return _poly_bracket(
            canonical_form(expr.left, conj), canonical_form(expr.right, conj), anti=True
        )
    raise TypeError(f"not an Expr: {expr!r}")


# ------------------------------------------------------------------ inference

def _infer_compositional(expr: Expr, env: TypeEnv) -> TypeSet:
    if isinstance(expr, Sym):
        return env.lookup(expr.name)
    if isinstance(expr, Add):
        return _infer_compositional(expr.left, env) | _infer_compositional(expr.right, env)
    if isinstance(expr, Neg):
        return _infer_compositional(expr.child, env)
    if isinstance(expr, ScalarMul):
        if expr.factor == 0:
            return TypeSet.empty(env.field)
        return _infer_compositional(expr.child, env)
    if isinstance(expr, IMul):
        return _infer_compositional(expr.child, env).i_flip()
    if isinstance(expr, Prod):
        return product_type(
            _infer_compositional(expr.left, env), _infer_compositional(expr.right, env)
        )
    if isinstance(expr, Comm):
        return commutator_type(
            _infer_compositional(expr.left, env), _infer_compositional(expr.right, env)
        )
    if isinstance(expr, AntiComm):
        return anticommutator_type(
            _infer_compositional(expr.left, env), _infer_compositional(expr.right, env)
        )
    if isinstance(expr, Conj):
        # every conjugation maps each atom subspace to itself
        return _infer_compositional(expr.child, env)
    raise TypeError(f"not an Expr: {expr!r}")


def infer_type(expr: Expr, env: TypeEnv) -> TypeSet:
    """Sound TypeSet over-approximation of the expression's value."""
    result = _infer_compositional(expr, env)
    base = canonical_form(expr)
    if not base:
        # the normal form cancelled everything: the value is identically zero
        return TypeSet.empty(env.field)
    neg = _poly_neg(base)
    ops = range(1, 8) if env.field == COMPLEX else range(1, 4)
    for bits in ops:
        rewritten = canonical_form(expr, bits)
        if rewritten == base:
            result = result & eigenspace(bits, 1, env.field)
        elif rewritten == neg:
            result = result & eigenspace(bits, -1, env.field)
    return result


# ------------------------------------------------------------------ evaluation

_CONJ_METHODS = {
    "rev": Multivector.reversion,
    "gri": Multivector.grade_involution,
    "conj": Multivector.complex_conjugate,
    "phc": Multivector.pseudo_hermitian,
}


def eval_expr(expr: Expr, env: TypeEnv, bindings: dict) -> Multivector:
    """Evaluate with concrete multivector bindings, checking declared types."""
    for name in sorted(free_symbols(expr)):
        declared = env.lookup(name)
        value = bindings.get(name)
        if value is None:
            raise BindingError(f"no binding for symbol {name!r}")
        if value.field != env.field:
            raise BindingError(f"binding for {name!r} has field {value.field}, env is {env.field}")
        if not classify_by_rank(value) <= declared:
            raise BindingError(
                f"binding for {name!r} has type {classify_by_rank(value)}, declared {declared}"
            )
    return _eval(expr, bindings)


def _eval(expr: Expr, bindings: dict) -> Multivector:
    if isinstance(expr, Sym):
        return bindings[expr.name]
    if isinstance(expr, Add):
        return _eval(expr.left, bindings) + _eval(expr.right, bindings)
    if isinstance(expr, Neg):
        return -_eval(expr.child, bindings)
    if isinstance(expr, ScalarMul):
        value = _eval(expr.child, bindings)
        factor = float(expr.factor) if value.backend == FLOAT else expr.factor
        return value.scale(factor)
    if isinstance(expr, IMul):
        value = _eval(expr.child, bindings)
        unit = (0.0, 1.0) if value.backend == FLOAT else (0, 1)
        return value.scale(unit)
    if isinstance(expr, Prod):
        return _eval(expr.left, bindings) * _eval(expr.right, bindings)
    if isinstance(expr, Comm):
        return commutator(_eval(expr.left, bindings), _eval(expr.right, bindings))
    if isinstance(expr, AntiComm):
        return anticommutator(_eval(expr.left, bindings), _eval(expr.right, bindings))
    if isinstance(expr, Conj):
        return _CONJ_METHODS[expr.op](_eval(expr.child, bindings))
    raise TypeError(f"not an Expr: {expr!r}")


# ------------------------------------------------------------------ random instances

def default_density(n: int) -> float:
    """Full density for small algebras, sparse for large ones."""
    return 1.0 if n <= 10 else 0.002


def random_instance(
    tset: TypeSet,
    sig: Signature,
    seed: int,
    density: float | None = None,
    backend: str = EXACT,
) -> Multivector:
    """Random multivector inside the TypeSet's subspace, deterministic per seed.

    Supported blades have rank = k mod 4 for the set's atoms; imaginary atoms
    get purely imaginary coefficients.  Each eligible blade is kept with the
    given probability (default: density 1 for n <= 10, 0.002 above).
    """
    if density is None:
        density = default_density(sig.n)
    if not 0 < density <= 1:
        raise AlgebraError(f"density must be in (0, 1], got {density}")
    rng = random.Random(seed)
    terms: dict[int, list] = {}
    zero = 0.0 if backend == FLOAT else 0
    for k, imag in tset.atoms():
        for r in range(k, sig.n + 1, 4):
            for combo in itertools.combinations(range(sig.n), r):
                if density < 1.0 and rng.random() >= density:
                    continue
                if backend == FLOAT:
                    value = rng.uniform(-1.0, 1.0) or 1.0
                else:
                    value = rng.choice((-9, -8, -7, -6, -5, -4, -3, -2, -1, 1, 2, 3, 4, 5, 6, 7, 8, 9))
                mask = 0
                for b in combo:
                    mask |= 1 << b
                pair = terms.setdefault(mask, [zero, zero])
                pair[1 if imag else 0] += value
    tmap = {m: (re, im) for m, (re, im) in terms.items() if re != 0 or im != 0}
    return Multivector._raw(sig, tset.field, backend, tmap)


# ------------------------------------------------------------------ soundness checking

@dataclass
class SoundnessReport:
    program: str
    inferred: TypeSet
    trials: int
    failures: int
    first_counterexample: dict | None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def as_dict(self) -> dict:
        return {
            "program": self.program,
            "inferred": str(self.inferred),
            "trials": self.trials,
            "failures": self.failures,
            "first_counterexample": self.first_counterexample,
            "passed": self.passed,
        }

    def format_text(self) -> str:
        lines = [
            f"program:  {self.program}",
            f"inferred: {self.inferred}",
            f"trials:   {self.trials}, failures: {self.failures}",
        ]
        if self.first_counterexample:
            ce = self.first_counterexample
            lines.append(f"first counterexample (trial {ce['trial']}, seed {ce['seed']}):")
            for name, text in ce["bindings"].items():
                lines.append(f"  {name} = {text}")
            lines.append(f"  observed type: {ce['observed']}")
        return "\n".join(lines)


def trial_seed(seed: int, trial: int) -> int:
    """Seed of one trial; recorded in counterexamples so runs reproduce."""
    return seed * 1_000_003 + trial


def check_soundness(
    expr: Expr,
    env: TypeEnv,
    sig: Signature,
    trials: int = 100,
    seed: int = 0,
    tol: float | None = None,
    backend: str = EXACT,
    density: float | None = None,
) -> SoundnessReport:
    """Instantiate symbols randomly and test membership in the inferred type.

    Failures are reported, not raised; the first one records the trial seed
    and the exact bindings.
    """
    if trials < 1:
        raise AlgebraError(f"trials must be >= 1, got {trials}")
    inferred = infer_type(expr, env)
    names = sorted(free_symbols(expr))
    failures = 0
    first = None
    for trial in range(trials):
        tseed = trial_seed(seed, trial)
        bindings = {
            name: random_instance(env.lookup(name), sig, tseed * 131 + j, density, backend)
            for j, name in enumerate(names)
        }
        result = _eval(expr, bindings)
        if not member(result, inferred, tol):
            failures += 1
            if first is None:
                first = {
                    "trial": trial,
                    "seed": tseed,
                    "bindings": {name: format_mv(mv) for name, mv in bindings.items()},
                    "observed": str(classify_by_rank(result)),
                }
    return SoundnessReport(
        program=format_program(env, expr),
        inferred=inferred,
        trials=trials,
        failures=failures,
        first_counterexample=first,
    )
