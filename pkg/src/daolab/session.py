"""Session-file DSL: ring and ideal declarations plus commands.

Grammar (statements end with ';'):

    ring_decl  := "ring" ID "=" field "[" idlist "]" ("/" "(" polylist ")")? mode?
    field      := "Q" | "F" natural
    mode       := "graded" | "local"
    ideal_decl := "ideal" ID "=" "(" polylist ")"
    command    := ("compute" | "verify" | "explore" | "resolve") args

Polynomials: terms joined by + or -; a term is an optional coefficient
(integer or integer/integer) times variable powers written with '^'; '*' is
optional.  Every identifier must be declared before use, and each ideal binds
to the ring that is active when it is declared.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import DaolabError, FieldError, InputError
from .fields import field_from_name
from .polynomials import Polynomial, PolyRing
from .rings import IdealHandle, PresentedRing


class SyntaxDiagnostic(DaolabError):
    def __init__(self, message: str, line: int, col: int, source_line: str = ""):
        self.message = message
        self.line = line
        self.col = col
        self.source_line = source_line
        super().__init__(self.render())

    def render(self) -> str:
        out = f"line {self.line}, column {self.col}: {self.message}"
        if self.source_line:
            out += "\n  " + self.source_line + "\n  " + " " * (self.col - 1) + "^"
        return out


@dataclass
class Token:
    kind: str  # ident | int | sym | end
    text: str
    line: int
    col: int


_SYMBOLS = ("..", "=", ";", ",", "(", ")", "[", "]", "/", "^", "*", "+", "-")


def _tokenize(text: str):
    tokens = []
    lines = text.splitlines() or [""]
    for ln, line in enumerate(lines, start=1):
        i = 0
        while i < len(line):
            ch = line[i]
            if ch.isspace():
                i += 1
                continue
            if ch == "#":
                break  # comment to end of line
            col = i + 1
            if ch.isalpha() or ch == "_":
                j = i
                while j < len(line) and (line[j].isalnum() or line[j] == "_"):
                    j += 1
                tokens.append(Token("ident", line[i:j], ln, col))
                i = j
                continue
            if ch.isdigit():
                j = i
                while j < len(line) and line[j].isdigit():
                    j += 1
                tokens.append(Token("int", line[i:j], ln, col))
                i = j
                continue
            for sym in _SYMBOLS:
                if line.startswith(sym, i):
                    tokens.append(Token("sym", sym, ln, col))
                    i += len(sym)
                    break
            else:
                raise SyntaxDiagnostic(f"unexpected character {ch!r}", ln, col, line)
    last_line = len(lines)
    tokens.append(Token("end", "", last_line, len(lines[-1]) + 1))
    return tokens, lines


@dataclass
class RingDecl:
    name: str
    ring: PresentedRing


@dataclass
class IdealDecl:
    name: str
    ring_name: str
    handle: IdealHandle


@dataclass
class Command:
    kind: str  # compute | verify | explore | resolve
    args: list
    line: int


@dataclass
class SessionScript:
    statements: list = dc_field(default_factory=list)
    rings: dict = dc_field(default_factory=dict)
    ideals: dict = dc_field(default_factory=dict)

    @property
    def commands(self):
        return [s for s in self.statements if isinstance(s, Command)]

    def ideal_pairs(self):
        """(ring, ideal, name) for every declared ideal, in order."""
        out = []
        for s in self.statements:
            if isinstance(s, IdealDecl):
                out.append((self.rings[s.ring_name].ring, s.handle, s.name))
        return out


class _Parser:
    def __init__(self, text: str):
        self.tokens, self.lines = _tokenize(text)
        self.pos = 0

    # -- token helpers ---------------------------------------------------------
    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def fail(self, message: str, tok: Token | None = None):
        tok = tok or self.peek()
        src = self.lines[tok.line - 1] if tok.line - 1 < len(self.lines) else ""
        raise SyntaxDiagnostic(message, tok.line, tok.col, src)

    def expect_sym(self, sym: str) -> Token:
        t = self.peek()
        if t.kind != "sym" or t.text != sym:
            self.fail(f"expected {sym!r}", t)
        return self.next()

    def expect_ident(self, what: str = "identifier") -> Token:
        t = self.peek()
        if t.kind != "ident":
            self.fail(f"expected {what}", t)
        return self.next()

    # -- grammar ------------------------------------------------------------------
    def parse(self) -> SessionScript:
        script = SessionScript()
        active_ring: str | None = None
        while self.peek().kind != "end":
            t = self.peek()
            if t.kind != "ident":
                self.fail("expected a statement (ring, ideal, compute, verify, explore, resolve)", t)
            if t.text == "ring":
                decl = self.parse_ring(script)
                script.statements.append(decl)
                script.rings[decl.name] = decl
                active_ring = decl.name
            elif t.text == "ideal":
                if active_ring is None:
                    self.fail("ideal declared before any ring", t)
                decl = self.parse_ideal(script, active_ring)
                script.statements.append(decl)
                script.ideals[decl.name] = decl
            elif t.text in ("compute", "verify", "explore", "resolve"):
                script.statements.append(self.parse_command(script))
            else:
                self.fail(f"unknown statement {t.text!r}", t)
        return script

    def parse_ring(self, script: SessionScript) -> RingDecl:
        self.next()  # ring
        name_tok = self.expect_ident("ring name")
        if name_tok.text in script.rings or name_tok.text in script.ideals:
            self.fail(f"identifier {name_tok.text!r} already declared", name_tok)
        self.expect_sym("=")
        field_tok = self.expect_ident("field (Q or F<prime>)")
        try:
            field = field_from_name(field_tok.text)
        except FieldError as exc:
            self.fail(str(exc), field_tok)
        self.expect_sym("[")
        names = [self.expect_ident("variable name").text]
        while self.peek().kind == "sym" and self.peek().text == ",":
            self.next()
            names.append(self.expect_ident("variable name").text)
        self.expect_sym("]")
        if len(set(names)) != len(names):
            self.fail("duplicate variable name", name_tok)
        ring = PolyRing(tuple(names), field)
        relations = []
        if self.peek().kind == "sym" and self.peek().text == "/":
            self.next()
            self.expect_sym("(")
            relations = self.parse_polylist(ring)
            self.expect_sym(")")
        mode = "graded"
        t = self.peek()
        if t.kind == "ident" and t.text in ("graded", "local"):
            mode = t.text
            self.next()
        self.expect_sym(";")
        try:
            presented = PresentedRing(ring, relations, mode=mode)
        except (InputError, DaolabError) as exc:
            self.fail(str(exc), name_tok)
        return RingDecl(name_tok.text, presented)

    def parse_ideal(self, script: SessionScript, active_ring: str) -> IdealDecl:
        self.next()  # ideal
        name_tok = self.expect_ident("ideal name")
        if name_tok.text in script.rings or name_tok.text in script.ideals:
            self.fail(f"identifier {name_tok.text!r} already declared", name_tok)
        self.expect_sym("=")
        self.expect_sym("(")
        ring = script.rings[active_ring].ring
        gens = self.parse_polylist(ring.ambient)
        self.expect_sym(")")
        self.expect_sym(";")
        try:
            handle = IdealHandle(ring, gens)
        except (InputError, DaolabError) as exc:
            self.fail(str(exc), name_tok)
        return IdealDecl(name_tok.text, active_ring, handle)

    def parse_command(self, script: SessionScript) -> Command:
        t = self.next()
        args = []
        while True:
            nt = self.peek()
            if nt.kind == "end":
                self.fail("unterminated command (missing ';')", nt)
            if nt.kind == "sym" and nt.text == ";":
                self.next()
                break
            if nt.kind in ("ident", "int"):
                word = self.next().text
                # key=value and range syntax for explore arguments
                while self.peek().kind == "sym" and self.peek().text in ("=", ".."):
                    word += self.next().text
                    nxt = self.peek()
                    if nxt.kind in ("ident", "int"):
                        word += self.next().text
                args.append(word)
            else:
                self.fail(f"unexpected {nt.text!r} in command", nt)
        return Command(t.text, args, t.line)

    # -- polynomials -----------------------------------------------------------------
    def parse_polylist(self, ring: PolyRing):
        polys = [self.parse_poly(ring)]
        while self.peek().kind == "sym" and self.peek().text == ",":
            self.next()
            polys.append(self.parse_poly(ring))
        return polys

    def parse_poly(self, ring: PolyRing) -> Polynomial:
        result = ring.zero
        sign = 1
        t = self.peek()
        if t.kind == "sym" and t.text in ("+", "-"):
            sign = -1 if t.text == "-" else 1
            self.next()
        result = result + self.parse_term(ring).scale(ring.field.of_int(sign))
        while True:
            t = self.peek()
            if t.kind == "sym" and t.text in ("+", "-"):
                self.next()
                sgn = -1 if t.text == "-" else 1
                result = result + self.parse_term(ring).scale(ring.field.of_int(sgn))
            else:
                return result

    def parse_term(self, ring: PolyRing) -> Polynomial:
        factors = [self.parse_factor(ring)]
        while True:
            t = self.peek()
            if t.kind == "sym" and t.text == "*":
                self.next()
                factors.append(self.parse_factor(ring))
            elif t.kind in ("ident", "int"):
                factors.append(self.parse_factor(ring))
            else:
                break
        out = factors[0]
        for f in factors[1:]:
            out = out * f
        return out

    def parse_factor(self, ring: PolyRing) -> Polynomial:
        t = self.peek()
        if t.kind == "int":
            self.next()
            num = int(t.text)
            if self.peek().kind == "sym" and self.peek().text == "/":
                self.next()
                den_tok = self.peek()
                if den_tok.kind != "int":
                    self.fail("expected an integer denominator", den_tok)
                self.next()
                den = int(den_tok.text)
                if den == 0:
                    self.fail("zero denominator", den_tok)
                return ring.const(Fraction(num, den))
            return ring.const(num)
        if t.kind == "ident":
            if t.text not in ring.names:
                self.fail(f"unknown variable {t.text!r}", t)
            self.next()
            exp = 1
            if self.peek().kind == "sym" and self.peek().text == "^":
                self.next()
                e_tok = self.peek()
                if e_tok.kind != "int":
                    self.fail("expected an integer exponent", e_tok)
                self.next()
                exp = int(e_tok.text)
            return ring.var(t.text) ** exp
        self.fail("expected a polynomial", t)


def parse_session(text: str) -> SessionScript:
    """Parse a session file; raises SyntaxDiagnostic with line/column."""
    return _Parser(text).parse()


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    """Parse one polynomial in the canonical text form against a ring."""
    parser = _Parser(text)
    p = parser.parse_poly(ring)
    if parser.peek().kind != "end":
        parser.fail("trailing input after polynomial")
    return p
