"""Text syntax for scalars and algebra elements.

Scalars:   integers, ``r``, ``s``, ``^`` with signed integer exponents,
           ``+ - * /`` and parentheses.
Elements:  additionally the letters ``e[i] E[i] f[i] P[i] w[i] v[i]``
           (``E`` is e'', ``P`` is f', ``w``/``v`` are omega/omega').
           Products are ``*`` or juxtaposition; indices are 1-based.

Printing is the inverse: ``parse(format(x)) == x`` for every element.
"""

from __future__ import annotations

import re

from .algebra import FreeElement, Letter, normal_form
from .errors import BadIndex, DivisionByZero, DSLSyntaxError, IllegalLetter
from .scalars import R, S

_TOKEN = re.compile(r"\s*(?:(\d+)|([eEfPwvrs])|(\S))")


def _tokenize(text):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        if m.lastindex is None:
            break
        col = m.start(m.lastindex) + 1
        if m.group(1):
            out.append(("int", int(m.group(1)), col))
        elif m.group(2):
            out.append(("name", m.group(2), col))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()[]":
                raise DSLSyntaxError(f"unexpected character {ch!r}", col)
            out.append(("op", ch, col))
        pos = m.end()
    return out


class _Parser:
    """Recursive descent over a token list; values live in FreeElement."""

    def __init__(self, text, allow_letters, rank=None):
        self.text = text
        self.toks = _tokenize(text)
        self.k = 0
        self.allow_letters = allow_letters
        self.rank = rank

    def peek(self):
        return self.toks[self.k] if self.k < len(self.toks) else None

    def col(self):
        t = self.peek()
        if t is not None:
            return t[2]
        return self.toks[-1][2] if self.toks else 1

    def take(self, kind=None, value=None):
        t = self.peek()
        if t is None:
            raise DSLSyntaxError("unexpected end of input", self.col())
        if (kind and t[0] != kind) or (value is not None and t[1] != value):
            raise DSLSyntaxError(f"expected {value or kind}, found {t[1]!r}", t[2])
        self.k += 1
        return t

    def at_op(self, *ops):
        t = self.peek()
        return t is not None and t[0] == "op" and t[1] in ops

    def parse(self):
        if not self.toks:
            raise DSLSyntaxError("empty expression", 1)
        val = self.expr()
        t = self.peek()
        if t is not None:
            raise DSLSyntaxError(f"unexpected {t[1]!r}", t[2])
        return val

    def expr(self):
        val = self.term()
        while self.at_op("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def starts_factor(self):
        t = self.peek()
        if t is None:
            return False
        return t[0] in ("int", "name") or (t[0] == "op" and t[1] == "(")

    def term(self):
        val = self.unary()
        while True:
            if self.at_op("*"):
                self.take()
                val = val * self.unary()
            elif self.at_op("/"):
                t = self.take()
                rhs = self.unary()
                if not rhs.is_scalar() or rhs.scalar_value().is_zero():
                    if rhs.is_scalar():
                        raise DivisionByZero("division by zero")
                    raise DSLSyntaxError("can only divide by a scalar", t[2] + 1)
                val = val * rhs.scalar_value().inverse()
            elif self.starts_factor():
                val = val * self.power()
            else:
                return val

    def unary(self):
        if self.at_op("-"):
            self.take()
            return -self.unary()
        if self.at_op("+"):
            self.take()
            return self.unary()
        return self.power()

    def signed_int(self):
        sign = 1
        if self.at_op("-"):
            self.take()
            sign = -1
        elif self.at_op("+"):
            self.take()
        return sign * self.take("int")[1]

    def power(self):
        base, letter = self.atom()
        if not self.at_op("^"):
            return base
        t = self.take()
        k = self.signed_int()
        if letter is not None:
            if k < 0 and letter.kind not in ("w", "v"):
                raise IllegalLetter(f"negative power of {letter.kind}[{letter.index + 1}]")
            if letter.kind in ("w", "v"):
                return FreeElement.word(Letter(letter.kind, letter.index, k)) if k else FreeElement.scalar(1)
            return FreeElement.word(*([letter] * k)) if k else FreeElement.scalar(1)
        if base.is_scalar():
            return FreeElement.scalar(base.scalar_value() ** k)
        if k < 0:
            raise DSLSyntaxError("negative power of a non-scalar", t[2])
        out = FreeElement.scalar(1)
        for _ in range(k):
            out = out * base
        return out

    def atom(self):
        t = self.peek()
        if t is None:
            raise DSLSyntaxError("expected an operand", self.col())
        if t[0] == "int":
            self.take()
            return FreeElement.scalar(t[1]), None
        if t[0] == "name":
            self.take()
            if t[1] == "r":
                return FreeElement.scalar(R), None
            if t[1] == "s":
                return FreeElement.scalar(S), None
            if not self.allow_letters:
                raise DSLSyntaxError(f"letter {t[1]!r} not allowed in a scalar", t[2])
            self.take("op", "[")
            idx = self.take("int")
            self.take("op", "]")
            if idx[1] < 1 or (self.rank is not None and idx[1] > self.rank):
                raise BadIndex(f"index {idx[1]} out of range at column {idx[2]}")
            letter = Letter(t[1], idx[1] - 1)
            return FreeElement.word(letter), letter
        if t[1] == "(":
            self.take()
            val = self.expr()
            self.take("op", ")")
            return val, None
        raise DSLSyntaxError(f"unexpected {t[1]!r}", t[2])


def parse_scalar(text):
    return _Parser(text, allow_letters=False).parse().scalar_value()


def parse_free(text, rank=None):
    return _Parser(text, allow_letters=True, rank=rank).parse()


def infer_parent(kinds):
    """Smallest of U, B, B-bar containing the letter kinds, by name."""
    if "E" in kinds and ("e" in kinds or "P" in kinds):
        raise IllegalLetter("e'' cannot be combined with e or f' in one algebra")
    if "P" in kinds and "f" in kinds:
        raise IllegalLetter("f' cannot be combined with f in one algebra")
    if "E" in kinds:
        return "B"
    if "P" in kinds:
        return "Bbar"
    return "U"


def parse_expression(text, alg, parent=None):
    """Parse ``text`` and normalize in ``parent`` (a name, an Algebra or None)."""
    free = parse_free(text, alg.n)
    if parent is None:
        parent = infer_parent(free.kinds())
    if isinstance(parent, str):
        parent = alg.algebra(parent)
    bad = free.kinds() - parent.kinds
    if bad:
        raise IllegalLetter(f"{', '.join(sorted(bad))} not in {parent.name}")
    return normal_form(free, parent)


# -- printing ---------------------------------------------------------------


def format_scalar(c):
    return str(c)


def _letter_str(letter):
    base = f"{letter.kind}[{letter.index + 1}]"
    if letter.exp != 1:
        base += f"^{letter.exp}"
    return base


def _word_str(letters):
    out = []
    k = 0
    while k < len(letters):
        l = letters[k]
        if l.kind in ("w", "v"):
            out.append(_letter_str(l))
            k += 1
            continue
        run = 1
        while k + run < len(letters) and letters[k + run] == l:
            run += 1
        out.append(_letter_str(Letter(l.kind, l.index, run)))
        k += run
    return "*".join(out)


def _coeff_prefix(c):
    """Return (sign, text) where text is empty for unit coefficients."""
    if c.is_one():
        return 1, ""
    if (-c).is_one():
        return -1, ""
    if c.is_monomial():
        s = str(c)
        if s.startswith("-"):
            return -1, s[1:]
        return 1, s
    return 1, f"({c})"


def _join_terms(pieces):
    if not pieces:
        return "0"
    out = []
    for k, (sign, body) in enumerate(pieces):
        if k == 0:
            out.append(body if sign > 0 else f"-{body}")
        else:
            out.append(f" + {body}" if sign > 0 else f" - {body}")
    return "".join(out)


def _term(c, word):
    sign, pre = _coeff_prefix(c)
    if not word:
        return sign, pre or "1"
    return sign, f"{pre}*{word}" if pre else word


def monomial_sort_key(mono):
    left, torus, right = mono
    return (len(left) + len(right), left, right, torus)


def format_element(x):
    parent = x.parent
    pieces = []
    for mono in sorted(x.terms, key=monomial_sort_key):
        pieces.append(_term(x.terms[mono], _word_str(parent.monomial_letters(mono))))
    return _join_terms(pieces)


def format_free(x):
    pieces = []
    for word in sorted(x.terms, key=lambda w: (len(w), w)):
        pieces.append(_term(x.terms[word], _word_str(list(word))))
    return _join_terms(pieces)


def format_tensor(t):
    pieces = []
    for key in sorted(t.terms, key=lambda k: tuple(monomial_sort_key(m) for m in k)):
        legs = []
        for par, mono in zip(t.parents, key):
            w = _word_str(par.monomial_letters(mono))
            legs.append(w or "1")
        pieces.append(_term(t.terms[key], " ⊗ ".join(legs)))
    return _join_terms(pieces)


def element_to_json(x):
    return [{"coeff": str(x.terms[m]), "word": _word_str(x.parent.monomial_letters(m)) or "1"}
            for m in sorted(x.terms, key=monomial_sort_key)]


def round_trip(x, alg):
    return parse_expression(format_element(x), alg, x.parent)

