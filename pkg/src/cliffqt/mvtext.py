"""Text and JSON forms of multivectors.

Grammar (UTF-8, whitespace-insensitive)::

    mv       := ['+'|'-'] term (('+'|'-') term)*
    term     := coeff ('*' blade)? | blade
    coeff    := rational 'i'? | 'i'
    rational := integer | integer '/' integer | decimal
    blade    := 'e'                      -- identity
              | 'e' digits               -- single-digit indices, n <= 9
              | 'e{' index (',' index)* '}'

``0`` is the zero multivector (a scalar term with coefficient 0).  Complex
coefficients are written as separate real and imaginary terms, e.g.
``2*e12 + 3i*e12``.  Formatting always produces the canonical form: terms
sorted by (rank, mask), real part before imaginary, explicit ``*``.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .algebra import COMPLEX, EXACT, REAL, Multivector, Signature
from .errors import AlgebraError, ParseError


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.tokens: list[tuple[str, object, int, int]] = []
        self._scan()

    def _loc(self, pos: int) -> tuple[int, int]:
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def _fail(self, msg: str, pos: int):
        line, col = self._loc(pos)
        raise ParseError(msg, line, col)

    def _scan(self):
        text = self.text
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            start = i
            if ch.isdigit():
                j = i + 1
                while j < len(text) and text[j].isdigit():
                    j += 1
                if j < len(text) and text[j] == "." and j + 1 < len(text) and text[j + 1].isdigit():
                    j += 1
                    while j < len(text) and text[j].isdigit():
                        j += 1
                    self.tokens.append(("DECIMAL", text[i:j], *self._loc(start)))
                else:
                    self.tokens.append(("INT", text[i:j], *self._loc(start)))
                i = j
            elif ch == "e":
                j = i + 1
                if j < len(text) and text[j] == "{":
                    j += 1
                    k = text.find("}", j)
                    if k < 0:
                        self._fail("unterminated blade index list", start)
                    body = text[j:k]
                    indices = []
                    for part in body.split(","):
                        part = part.strip()
                        if not part.isdigit():
                            self._fail(f"bad blade index {part!r}", start)
                        indices.append(int(part))
                    self.tokens.append(("BLADE", (tuple(indices), True), *self._loc(start)))
                    i = k + 1
                else:
                    while j < len(text) and text[j].isdigit():
                        j += 1
                    digits = text[i + 1 : j]
                    indices = tuple(int(d) for d in digits)
                    self.tokens.append(("BLADE", (indices, False), *self._loc(start)))
                    i = j
            elif ch == "i":
                self.tokens.append(("I", "i", *self._loc(start)))
                i += 1
            elif ch in "+-*/":
                self.tokens.append((ch, ch, *self._loc(start)))
                i += 1
            else:
                self._fail(f"malformed token {ch!r}", start)
        self.tokens.append(("EOF", None, *self._loc(len(text))))


class _Parser:
    def __init__(self, text: str, sig: Signature, field: str, backend: str):
        self.toks = _Lexer(text).tokens
        self.i = 0
        self.sig = sig
        self.field = field
        self.backend = backend

    def _peek(self):
        return self.toks[self.i]

    def _next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def _fail(self, msg, tok=None):
        tok = tok or self._peek()
        raise ParseError(msg, tok[2], tok[3])

    def parse(self) -> Multivector:
        terms = []
        sign = 1
        kind, _, _, _ = self._peek()
        if kind in ("+", "-"):
            sign = 1 if self._next()[0] == "+" else -1
        terms.append(self._term(sign))
        while self._peek()[0] != "EOF":
            kind, _, line, col = self._next()
            if kind not in ("+", "-"):
                raise ParseError(f"expected '+' or '-', got {kind}", line, col)
            terms.append(self._term(1 if kind == "+" else -1))
        out = Multivector.zero(self.sig, self.field, self.backend)
        for mask, value in terms:
            out = out + Multivector(self.sig, {mask: value}, self.field, self.backend)
        return out

    def _term(self, sign: int):
        kind = self._peek()[0]
        if kind == "BLADE":
            mask = self._blade(self._next())
            return mask, self._pair(sign, imag=False)
        if kind in ("INT", "DECIMAL", "I"):
            value, imag = self._coeff()
            nxt = self._peek()[0]
            if nxt == "*":
                self._next()
                if self._peek()[0] != "BLADE":
                    self._fail("expected blade after '*'")
                mask = self._blade(self._next())
            elif nxt == "BLADE":
                mask = self._blade(self._next())  # tolerated implicit product
            else:
                mask = 0
            if sign < 0:
                value = -value
            return mask, self._pair_value(value, imag)
        self._fail("expected a term")

    def _coeff(self):
        kind, lexeme, line, col = self._next()
        if kind == "I":
            return self._one(), True
        if kind == "INT":
            num = int(lexeme)
            if self._peek()[0] == "/":
                self._next()
                dkind, dlex, dline, dcol = self._next()
                if dkind != "INT":
                    raise ParseError("fraction denominator must be an integer", dline, dcol)
                den = int(dlex)
                if den == 0:
                    raise ParseError("zero denominator", dline, dcol)
                value = self._rat(num, den)
            else:
                value = num if self.backend == EXACT else float(num)
        elif kind == "DECIMAL":
            value = Fraction(lexeme) if self.backend == EXACT else float(lexeme)
        else:
            raise ParseError(f"expected a coefficient, got {kind}", line, col)
        imag = False
        if self._peek()[0] == "I":
            self._next()
            imag = True
        return value, imag

    def _one(self):
        return 1 if self.backend == EXACT else 1.0

    def _rat(self, num, den):
        if self.backend == EXACT:
            return Fraction(num, den)
        return num / den

    def _pair(self, sign, imag):
        return self._pair_value(self._one() if sign > 0 else -self._one(), imag)

    def _pair_value(self, value, imag):
        zero = 0 if self.backend == EXACT else 0.0
        if imag:
            if self.field != COMPLEX:
                raise ParseError("imaginary coefficient needs the complex field")
            return (zero, value)
        return (value, zero)

    def _blade(self, tok) -> int:
        _, (indices, braced), line, col = tok
        if not braced and indices and self.sig.n > 9:
            raise ParseError(
                "digit blade form is ambiguous for n > 9; use e{i,j,...}", line, col
            )
        mask = 0
        prev = 0
        for a in indices:
            if not 1 <= a <= self.sig.n:
                raise ParseError(f"blade index {a} out of range 1..{self.sig.n}", line, col)
            if a <= prev:
                raise ParseError("blade indices must be strictly increasing", line, col)
            prev = a
            mask |= 1 << (a - 1)
        return mask


def parse_mv(text: str, sig: Signature, field: str = REAL, backend: str = EXACT) -> Multivector:
    """Parse a multivector literal; raises ParseError with position on bad input."""
    return _Parser(text, sig, field, backend).parse()


def _format_float(v: float) -> str:
    s = repr(v)
    if "e" in s or "E" in s:
        # expand tiny/huge magnitudes positionally; keep 17 significant digits
        exp = math.floor(math.log10(abs(v)))
        decimals = max(0, 17 - exp) if exp < 17 else 0
        s = f"{v:.{decimals}f}"
    return s


def _format_number(v) -> str:
    if isinstance(v, float):
        return _format_float(v)
    return str(v)


def format_mv(u: Multivector) -> str:
    """Canonical text form; ``parse_mv`` of the result reproduces ``u``."""
    pieces = []
    n = u.sig.n
    for mask, (re, im) in u.terms():
        for value, imag in ((re, False), (im, True)):
            if value == 0:
                continue
            neg = value < 0
            mag = -value if neg else value
            if mask == 0:
                if imag:
                    body = "i" if mag == 1 else _format_number(mag) + "i"
                else:
                    body = _format_number(mag)
            else:
                blade = _blade_text(mask, n)
                if mag == 1:
                    body = ("i*" if imag else "") + blade
                else:
                    body = _format_number(mag) + ("i*" if imag else "*") + blade
            pieces.append(("-" if neg else "+", body))
    if not pieces:
        return "0"
    first_sign, first_body = pieces[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


def _blade_text(mask: int, n: int) -> str:
    from .algebra import blade_indices

    indices = blade_indices(mask)
    if not indices:
        return "e"
    if n <= 9:
        return "e" + "".join(str(a) for a in indices)
    return "e{" + ",".join(str(a) for a in indices) + "}"


def mv_to_dict(u: Multivector) -> dict:
    """JSON-ready structured form with exact coefficient strings."""
    from .algebra import blade_indices

    return {
        "signature": {"p": u.sig.p, "q": u.sig.q},
        "field": u.field,
        "backend": u.backend,
        "terms": [
            {
                "blade": list(blade_indices(mask)),
                "re": _format_number(re),
                "im": _format_number(im),
            }
            for mask, (re, im) in u.terms()
        ],
    }


def mv_from_dict(data: dict) -> Multivector:
    sig = Signature(data["signature"]["p"], data["signature"]["q"])
    field = data["field"]
    backend = data["backend"]
    terms = {}
    for entry in data["terms"]:
        from .algebra import mask_from_indices

        mask = mask_from_indices(entry["blade"], sig.n)
        if backend == EXACT:
            re = Fraction(entry["re"])
            im = Fraction(entry["im"])
            re = re.numerator if re.denominator == 1 else re
            im = im.numerator if im.denominator == 1 else im
        else:
            re = float(entry["re"])
            im = float(entry["im"])
        if mask in terms:
            raise AlgebraError(f"duplicate blade {entry['blade']} in structured input")
        terms[mask] = (re, im)
    return Multivector(sig, terms, field, backend)
