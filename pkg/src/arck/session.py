"""Session files: named rings and ideals plus an ordered task list.

Grammar (``#`` starts a comment; whitespace is free-form)::

    ring NAME { field = Q | Fp P; vars = x, y; weights = 1, 2;
                order = lex | grevlex; quotient = poly, poly }
    ideal NAME in RING = poly, poly
    task KIND [NAME] { key = value, key = value }

Polynomials are signed sums of terms; a coefficient is ``int`` or
``int/int``; a monomial is ``var`` or ``var^int`` with ``*`` between factors
optional; parentheses group and are expanded to canonical form.  Task kinds:
gb, op, ar, reltype, bound, example1, example2, lemma-checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coeff import QQ, PrimeField
from .errors import SessionError
from .ideals import Ideal
from .poly import Polynomial, RingPresentation

KEYWORDS = {"ring", "ideal", "task", "in"}
PUNCT = set("{}()=,;^*+-/:")

TASK_KINDS = {"gb", "op", "ar", "reltype", "bound", "example1", "example2",
              "lemma-checks"}
OP_KINDS = {"intersect", "sum", "product", "power", "colon", "saturate",
            "member", "equal", "reduction", "multiplicity", "h0length"}
POLY_KEYS = {"f", "y", "g", "p", "witness"}
YESNO = {"yes": True, "no": False}


@dataclass(frozen=True)
class Token:
    kind: str  # 'ident' | 'int' | punct | 'eof'
    text: str
    line: int
    col: int


def tokenize(text: str):
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_col = col
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("ident", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("int", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch in PUNCT:
            tokens.append(Token(ch, ch, line, start_col))
            i += 1
            col += 1
            continue
        raise SessionError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("eof", "", line, col))
    return tokens


@dataclass
class Task:
    kind: str
    name: str | None
    params: dict
    line: int

    def label(self, index: int) -> str:
        return self.name if self.name else f"{self.kind}#{index}"

    def __eq__(self, other):
        return (isinstance(other, Task) and other.kind == self.kind
                and other.name == self.name and other.params == self.params)


@dataclass
class Session:
    rings: dict = field(default_factory=dict)
    ideals: dict = field(default_factory=dict)
    tasks: list = field(default_factory=list)

    def __eq__(self, other):
        if not isinstance(other, Session):
            return NotImplemented
        if self.rings != other.rings:
            return False
        mine = {k: (v.ring, v.generators) for k, v in self.ideals.items()}
        theirs = {k: (v.ring, v.generators) for k, v in other.ideals.items()}
        return mine == theirs and self.tasks == other.tasks


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0
        self.session = Session()
        self.ring_fields = {}  # ring name -> declared field name (for render)

    # -- token plumbing ------------------------------------------------------

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str = None) -> Token:
        tok = self.next()
        if tok.kind != kind:
            raise SessionError(
                f"expected {what or kind}, found {tok.text or 'end of input'!r}",
                tok.line, tok.col)
        return tok

    def fail(self, msg: str, tok: Token = None):
        tok = tok or self.peek()
        raise SessionError(msg, tok.line, tok.col)

    # -- declarations --------------------------------------------------------

    def parse(self) -> Session:
        while True:
            tok = self.peek()
            if tok.kind == "eof":
                break
            if tok.kind != "ident":
                self.fail(f"expected a declaration, found {tok.text!r}")
            if tok.text == "ring":
                self.parse_ring()
            elif tok.text == "ideal":
                self.parse_ideal()
            elif tok.text == "task":
                self.parse_task()
            else:
                self.fail(f"expected 'ring', 'ideal' or 'task', found "
                          f"{tok.text!r}")
        self.validate_tasks()
        return self.session

    def parse_name(self) -> Token:
        tok = self.expect("ident", "a name")
        if tok.text in KEYWORDS:
            self.fail(f"{tok.text!r} is a reserved word", tok)
        return tok

    def parse_ring(self):
        self.next()  # 'ring'
        name = self.parse_name()
        if name.text in self.session.rings:
            self.fail(f"duplicate ring name {name.text!r}", name)
        self.expect("{")
        raw = {}
        while self.peek().kind != "}":
            key = self.expect("ident", "a ring field").text
            if key in raw:
                self.fail(f"duplicate ring field {key!r}")
            self.expect("=")
            raw[key] = self.collect_until({";", "}"})
            if self.peek().kind == ";":
                self.next()
        self.expect("}")
        unknown = set(raw) - {"field", "vars", "weights", "order", "quotient"}
        if unknown:
            self.fail(f"unknown ring field {sorted(unknown)[0]!r}", name)
        if "vars" not in raw:
            self.fail("ring declaration needs 'vars'", name)

        fieldk = QQ
        if "field" in raw:
            toks = raw["field"]
            if toks and toks[0].text == "Q" and len(toks) == 1:
                fieldk = QQ
            elif toks and toks[0].text == "Fp":
                if len(toks) != 2 or toks[1].kind != "int":
                    self.fail("expected 'Fp P' with a prime P", toks[0])
                try:
                    fieldk = PrimeField(int(toks[1].text))
                except ValueError as exc:
                    raise SessionError(str(exc), toks[1].line, toks[1].col)
            else:
                self.fail("field must be 'Q' or 'Fp P'", toks[0])
        variables = self.ident_list(raw["vars"], "vars")
        weights = None
        if "weights" in raw:
            weights = self.int_list(raw["weights"], "weights")
        order = "grevlex"
        if "order" in raw:
            toks = raw["order"]
            if len(toks) != 1 or toks[0].text not in ("lex", "grevlex"):
                self.fail("order must be 'lex' or 'grevlex'",
                          toks[0] if toks else name)
            order = toks[0].text
        try:
            ambient = RingPresentation(fieldk, variables, weights, order)
        except Exception as exc:
            raise SessionError(str(exc), name.line, name.col)
        ring = ambient
        if "quotient" in raw:
            qs = [self.poly_from_tokens(toks, ambient)
                  for toks in split_list(raw["quotient"])]
            ring = ambient.with_quotient(qs)
        self.session.rings[name.text] = ring
        self.ring_fields[name.text] = raw

    def parse_ideal(self):
        self.next()  # 'ideal'
        name = self.parse_name()
        if name.text in self.session.ideals or name.text in self.session.rings:
            self.fail(f"duplicate name {name.text!r}", name)
        kw = self.expect("ident", "'in'")
        if kw.text != "in":
            self.fail("expected 'in'", kw)
        rname = self.parse_name()
        if rname.text not in self.session.rings:
            self.fail(f"unknown ring {rname.text!r}", rname)
        ring = self.session.rings[rname.text]
        self.expect("=")
        toks = self.collect_until({";"}, stop_keywords=True)
        if self.peek().kind == ";":
            self.next()
        gens = [self.poly_from_tokens(part, ring)
                for part in split_list(toks)]
        self.session.ideals[name.text] = Ideal(ring, gens)

    def parse_task(self):
        head = self.next()  # 'task'
        kind = self.expect("ident", "a task kind").text
        while self.peek().kind == "-":
            self.next()
            kind += "-" + self.expect("ident", "a task kind").text
        if kind not in TASK_KINDS:
            self.fail(f"unknown task kind {kind!r}", head)
        name = None
        if self.peek().kind == "ident":
            name = self.parse_name().text
        self.expect("{")
        params = {}
        while self.peek().kind != "}":
            key = self.expect("ident", "a parameter name").text
            if key in params:
                self.fail(f"duplicate parameter {key!r}")
            self.expect("=")
            params[key] = self.parse_value(key)
            if self.peek().kind == ",":
                self.next()
        self.expect("}")
        self.session.tasks.append(Task(kind, name, params, head.line))

    # -- values ---------------------------------------------------------------

    def collect_until(self, stops, stop_keywords=False):
        out = []
        depth = 0
        while True:
            tok = self.peek()
            if tok.kind == "eof":
                break
            if depth == 0 and tok.kind in stops:
                break
            if depth == 0 and stop_keywords and tok.kind == "ident" \
                    and tok.text in ("ring", "ideal", "task"):
                break
            if tok.kind == "(":
                depth += 1
            elif tok.kind == ")":
                depth -= 1
                if depth < 0:
                    self.fail("unbalanced ')'")
            out.append(self.next())
        return out

    def parse_value(self, key):
        tok = self.peek()
        if tok.kind == "(":
            return self.parse_flags()
        if key in POLY_KEYS:
            return self.collect_until({",", "}"})
        if tok.kind == "int":
            self.next()
            return int(tok.text)
        if tok.kind == "-" and self.tokens[self.pos + 1].kind == "int":
            self.next()
            return -int(self.next().text)
        if tok.kind == "ident":
            self.next()
            if tok.text in YESNO:
                return YESNO[tok.text]
            return tok.text
        self.fail(f"cannot read a value from {tok.text!r}")

    def parse_flags(self):
        self.expect("(")
        flags = {}
        while True:
            key = self.expect("ident", "a flag name").text
            self.expect(":")
            val = self.expect("ident", "'yes' or 'no'")
            if val.text not in YESNO:
                self.fail("flags take 'yes' or 'no'", val)
            flags[key] = YESNO[val.text]
            if self.peek().kind == ",":
                self.next()
                continue
            break
        self.expect(")")
        return flags

    # -- polynomial expressions -------------------------------------------------

    def poly_from_tokens(self, toks, ring) -> Polynomial:
        if not toks:
            self.fail("empty polynomial")
        return _PolyParser(toks, ring).parse()

    # -- task validation -----------------------------------------------------------

    def need(self, task: Task, key: str):
        if key not in task.params:
            raise SessionError(
                f"task {task.kind!r} needs parameter {key!r}", task.line)
        return task.params[key]

    def ideal_ref(self, task: Task, key: str) -> Ideal:
        name = self.need(task, key)
        if not isinstance(name, str) or name not in self.session.ideals:
            raise SessionError(
                f"task {task.kind!r}: unknown ideal {name!r}", task.line)
        return self.session.ideals[name]

    def validate_tasks(self):
        seen_labels = set()
        for idx, task in enumerate(self.session.tasks, start=1):
            label = task.label(idx)
            if label in seen_labels:
                raise SessionError(f"duplicate task name {label!r}", task.line)
            seen_labels.add(label)
            self.validate_task(task)

    def validate_task(self, task: Task):
        p = task.params
        kind = task.kind
        if kind == "gb":
            self.ideal_ref(task, "ideal")
        elif kind == "op":
            op = self.need(task, "op")
            if op not in OP_KINDS:
                raise SessionError(f"unknown op {op!r}", task.line)
            if op in ("intersect", "sum", "product", "equal", "saturate"):
                self.ideal_ref(task, "I")
                self.ideal_ref(task, "J")
            elif op == "power":
                self.ideal_ref(task, "I")
                self.int_param(task, "n")
            elif op == "colon":
                I = self.ideal_ref(task, "I")
                if "J" in p:
                    self.ideal_ref(task, "J")
                elif "f" in p:
                    p["f"] = self.poly_from_tokens(p["f"], I.ring)
                else:
                    raise SessionError("colon needs 'f' or 'J'", task.line)
            elif op == "member":
                I = self.ideal_ref(task, "I")
                p["f"] = self.poly_from_tokens(self.need(task, "f"), I.ring)
            elif op == "reduction":
                self.ideal_ref(task, "I")
                self.int_param(task, "n")
            elif op == "multiplicity":
                self.ring_ref(task, "ring")
            elif op == "h0length":
                self.ideal_ref(task, "I")
        elif kind == "ar":
            self.ideal_ref(task, "I")
            self.ideal_ref(task, "J")
            self.int_param(task, "nmax")
            if "expect_uniform" in p:
                self.int_param(task, "expect_uniform")
        elif kind == "reltype":
            self.ideal_ref(task, "I")
            if "J" in p:
                self.ideal_ref(task, "J")
        elif kind == "bound":
            ring = self.ring_ref(task, "ring")
            J = self.ideal_ref(task, "J")
            if J.ring != ring:
                raise SessionError("bound: J must live in the given ring",
                                   task.line)
        elif kind in ("example1", "example2"):
            n = self.int_param(task, "n")
            if n < 2:
                raise SessionError(f"{kind} needs n >= 2", task.line)
            if "char" in p:
                char = self.int_param(task, "char")
                try:
                    PrimeField(char)
                except ValueError as exc:
                    raise SessionError(str(exc), task.line)
                if kind == "example1" and char <= n:
                    raise SessionError(
                        f"example1 needs characteristic > n, got p = {char} "
                        f"<= n = {n}", task.line)
        elif kind == "lemma-checks":
            check = self.need(task, "check")
            if check == "intersection":
                self.ideal_ref(task, "N1")
                self.ideal_ref(task, "N2")
                self.int_param(task, "h")
                self.int_param(task, "n")
            elif check == "transfer":
                self.ideal_ref(task, "I")
                self.ideal_ref(task, "J")
                self.int_param(task, "nmax")
                if "h" in p:
                    self.int_param(task, "h")
            else:
                raise SessionError(
                    f"lemma-checks: unknown check {check!r}", task.line)

    def ring_ref(self, task: Task, key: str):
        name = self.need(task, key)
        if not isinstance(name, str) or name not in self.session.rings:
            raise SessionError(
                f"task {task.kind!r}: unknown ring {name!r}", task.line)
        return self.session.rings[name]

    def int_param(self, task: Task, key: str) -> int:
        val = self.need(task, key)
        if not isinstance(val, int):
            raise SessionError(
                f"parameter {key!r} must be an integer", task.line)
        return val

    # -- small list helpers -----------------------------------------------------

    def ident_list(self, toks, what):
        out = []
        for part in split_list(toks):
            if len(part) != 1 or part[0].kind != "ident":
                self.fail(f"{what} must be a comma-separated name list",
                          part[0] if part else None)
            out.append(part[0].text)
        return out

    def int_list(self, toks, what):
        out = []
        for part in split_list(toks):
            if len(part) != 1 or part[0].kind != "int":
                self.fail(f"{what} must be a comma-separated integer list",
                          part[0] if part else None)
            out.append(int(part[0].text))
        return out


def split_list(toks):
    """Split a token run on top-level commas."""
    parts = [[]]
    depth = 0
    for tok in toks:
        if tok.kind == "(":
            depth += 1
        elif tok.kind == ")":
            depth -= 1
        if tok.kind == "," and depth == 0:
            parts.append([])
        else:
            parts[-1].append(tok)
    return [p for p in parts if p]


class _PolyParser:
    """Recursive-descent parser for the polynomial grammar over one ring."""

    def __init__(self, toks, ring):
        self.toks = list(toks) + [Token("eof", "", toks[-1].line, toks[-1].col)]
        self.pos = 0
        self.ring = ring

    def peek(self):
        return self.toks[self.pos]

    def next(self):
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> Polynomial:
        p = self.expr()
        tok = self.peek()
        if tok.kind != "eof":
            raise SessionError(f"unexpected {tok.text!r} in polynomial",
                               tok.line, tok.col)
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.next().kind
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "*":
                self.next()
                p = p * self.factor()
            elif tok.kind in ("ident", "int", "("):
                p = p * self.factor()  # juxtaposition
            else:
                return p

    def factor(self) -> Polynomial:
        sign = 1
        while self.peek().kind in ("+", "-"):
            if self.next().kind == "-":
                sign = -sign
        p = self.atom()
        if self.peek().kind == "^":
            self.next()
            tok = self.next()
            if tok.kind != "int":
                raise SessionError("exponent must be a non-negative integer",
                                   tok.line, tok.col)
            p = p ** int(tok.text)
        return p if sign == 1 else -p

    def atom(self) -> Polynomial:
        tok = self.next()
        if tok.kind == "int":
            num = int(tok.text)
            if self.peek().kind == "/":
                self.next()
                den_tok = self.next()
                if den_tok.kind != "int":
                    raise SessionError("expected an integer denominator",
                                       den_tok.line, den_tok.col)
                den = int(den_tok.text)
                if den == 0:
                    raise SessionError("zero denominator", den_tok.line,
                                       den_tok.col)
                return self.ring.const(self.ring.field.normalize(num, den))
            return self.ring.const(num)
        if tok.kind == "ident":
            if tok.text not in self.ring.variables:
                raise SessionError(
                    f"unknown variable {tok.text!r} (ring has "
                    f"{', '.join(self.ring.variables)})", tok.line, tok.col)
            return self.ring.var(tok.text)
        if tok.kind == "(":
            p = self.expr()
            closing = self.next()
            if closing.kind != ")":
                raise SessionError("expected ')'", closing.line, closing.col)
            return p
        raise SessionError(f"unexpected {tok.text or 'end of input'!r} in "
                           "polynomial", tok.line, tok.col)


def parse_session(text: str) -> Session:
    """Parse and fully resolve a session file; diagnostics carry line/col."""
    return _Parser(text).parse()


def parse_poly(text: str, ring: RingPresentation) -> Polynomial:
    """Parse one polynomial in the session grammar over the given ring."""
    toks = tokenize(text)[:-1]
    if not toks:
        raise SessionError("empty polynomial")
    return _PolyParser(toks, ring).parse()


def render_session(session: Session) -> str:
    """Canonical text for a session; parsing it back gives an equal session."""
    lines = []
    ring_names = {}
    for name, ring in session.rings.items():
        ring_names[ring] = name
        fields = []
        fieldk = ring.field
        fields.append("field = Q" if fieldk == QQ
                      else f"field = Fp {fieldk.characteristic}")
        fields.append("vars = " + ", ".join(ring.variables))
        fields.append("weights = " + ", ".join(str(w) for w in ring.weights))
        fields.append(f"order = {'lex' if ring.order.kind == 'lex' else 'grevlex'}")
        if ring.quotient:
            fields.append("quotient = " + ", ".join(str(q) for q in ring.quotient))
        lines.append(f"ring {name} {{ " + "; ".join(fields) + " }")
    for name, ideal in session.ideals.items():
        rname = ring_names[ideal.ring]
        gens = ", ".join(str(g) for g in ideal.generators) or "0"
        lines.append(f"ideal {name} in {rname} = {gens}")
    for task in session.tasks:
        head = f"task {task.kind}" + (f" {task.name}" if task.name else "")
        parts = []
        for key, val in task.params.items():
            parts.append(f"{key} = {render_value(val)}")
        lines.append(head + " { " + ", ".join(parts) + " }")
    return "\n".join(lines) + "\n"


def render_value(val) -> str:
    if isinstance(val, bool):
        return "yes" if val else "no"
    if isinstance(val, dict):
        inner = ", ".join(f"{k}: {'yes' if v else 'no'}" for k, v in val.items())
        return f"({inner})"
    if isinstance(val, Polynomial):
        return str(val)
    if isinstance(val, list):  # unparsed polynomial tokens
        return " ".join(t.text for t in val)
    return str(val)
