"""Finite group presentations: data model, text grammar, deficiency counts,
quotients, and Tietze simplification.

Presentation files are UTF-8 and line oriented; ``#`` starts a comment.

    file      := gens_line rel_line*
    gens_line := "gens:" name ("," name)*
    rel_line  := "rel:" word
    word      := term (("*")? term)*
    term      := atom ("^" int)?
    atom      := name | "(" word ")" | "[" word "," word "]"
    name      := [A-Za-z][A-Za-z0-9_]*        int := "-"? [0-9]+

``[a,b]`` expands to a^-1 b^-1 a b.  The canonical printer emits the same
grammar, with explicit ``*`` and run-length powers.
"""

from __future__ import annotations

import math
import re
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .words import Word, is_prime, nu_p, reduce

NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")

DEFAULT_TIETZE_BUDGET = 5000


class ParseError(ValueError):
    """Syntax or semantic error in a presentation file, with position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class PresentationWarning(UserWarning):
    """Suspicious but legal input: zero exponents, empty relators."""


class TietzeBudgetWarning(UserWarning):
    """Simplification stopped by its step budget, not at a fixpoint."""


@dataclass(frozen=True)
class Presentation:
    """An ordered generator list plus freely reduced relator words."""

    generator_names: tuple[str, ...]
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        seen = set()
        for name in self.generator_names:
            if not NAME_RE.fullmatch(name):
                raise ValueError(f"bad generator name {name!r}")
            if name in seen:
                raise ValueError(f"duplicate generator {name!r}")
            seen.add(name)
        n = len(self.generator_names)
        for r in self.relators:
            if r.max_index() > n:
                raise ValueError(f"relator uses generator index {r.max_index()}, alphabet has {n}")

    @property
    def n_generators(self) -> int:
        return len(self.generator_names)

    def generator(self, name: str) -> Word:
        return Word((self.generator_names.index(name) + 1,))


@dataclass(frozen=True)
class DeficiencyReport:
    """Exact p-deficiency of one presentation, with per-relator terms."""

    p: int
    value: Fraction
    per_relator: tuple[tuple[int, object, Fraction], ...]  # (index, nu_p, p^-nu_p)


# ---------------------------------------------------------------------------
# parsing


_TOKEN_RE = re.compile(
    r"""(?P<NAME>[A-Za-z][A-Za-z0-9_]*)
      | (?P<INT>-?[0-9]+)
      | (?P<SYM>[*^()\[\],:])
      | (?P<WS>[ \t]+)
      | (?P<BAD>.)""",
    re.VERBOSE,
)


def _tokenize(text: str, line_no: int):
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        kind = m.lastgroup
        if kind == "WS":
            continue
        if kind == "BAD":
            raise ParseError(f"unexpected character {m.group()!r}", line_no, m.start() + 1)
        tokens.append((kind, m.group(), m.start() + 1))
    return tokens


class _WordParser:
    """Recursive descent over one relator expression."""

    def __init__(self, tokens, line_no, gen_index):
        self.tokens = tokens
        self.pos = 0
        self.line = line_no
        self.gen_index = gen_index

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of line", self.line, self._end_col())
        self.pos += 1
        return tok

    def _end_col(self):
        return self.tokens[-1][2] + len(self.tokens[-1][1]) if self.tokens else 1

    def expect(self, value):
        tok = self.take()
        if tok[1] != value:
            raise ParseError(f"expected {value!r}, got {tok[1]!r}", self.line, tok[2])
        return tok

    def parse_word(self) -> list[int]:
        letters = list(self.parse_term())
        while True:
            tok = self.peek()
            if tok is None or tok[1] in (")", ",", "]"):
                return letters
            if tok[1] == "*":
                self.take()
            letters.extend(self.parse_term())

    def parse_term(self) -> list[int]:
        letters = self.parse_atom()
        tok = self.peek()
        if tok is not None and tok[1] == "^":
            self.take()
            itok = self.take()
            if itok[0] != "INT":
                raise ParseError(f"expected an integer exponent, got {itok[1]!r}", self.line, itok[2])
            n = int(itok[1])
            if n == 0:
                warnings.warn(
                    f"line {self.line}: zero exponent yields the empty word",
                    PresentationWarning,
                    stacklevel=6,
                )
                return []
            if n < 0:
                letters = [-ell for ell in reversed(letters)]
                n = -n
            return letters * n
        return letters

    def parse_atom(self) -> list[int]:
        tok = self.take()
        if tok[0] == "NAME":
            idx = self.gen_index.get(tok[1])
            if idx is None:
                raise ParseError(f"unknown generator {tok[1]!r}", self.line, tok[2])
            return [idx]
        if tok[1] == "(":
            inner = self.parse_word()
            self.expect(")")
            return inner
        if tok[1] == "[":
            a = self.parse_word()
            self.expect(",")
            b = self.parse_word()
            self.expect("]")
            ainv = [-ell for ell in reversed(a)]
            binv = [-ell for ell in reversed(b)]
            return ainv + binv + a + b
        raise ParseError(f"unexpected token {tok[1]!r}", self.line, tok[2])


def _strip_comment(line: str) -> str:
    cut = line.find("#")
    return line if cut < 0 else line[:cut]


def parse_word(text: str, generator_names, line_no: int = 1) -> Word:
    """Parse a single word expression over the given generators."""
    gen_index = {name: i + 1 for i, name in enumerate(generator_names)}
    tokens = _tokenize(text, line_no)
    if not tokens:
        raise ParseError("empty word expression", line_no, 1)
    parser = _WordParser(tokens, line_no, gen_index)
    letters = parser.parse_word()
    if parser.peek() is not None:
        tok = parser.peek()
        raise ParseError(f"trailing input {tok[1]!r}", line_no, tok[2])
    return reduce(letters)


def parse_presentation(text: str) -> Presentation:
    """Parse the line-oriented presentation grammar."""
    lines = []
    for i, raw in enumerate(text.lstrip("﻿").splitlines(), start=1):
        stripped = _strip_comment(raw)
        if stripped.strip():
            lines.append((i, stripped))
    if not lines:
        raise ParseError("no gens: line", 1, 1)

    line_no, gens_line = lines[0]
    tokens = _tokenize(gens_line, line_no)
    if len(tokens) < 2 or tokens[0][1] != "gens" or tokens[1][1] != ":":
        raise ParseError("expected 'gens:' line", line_no, tokens[0][2] if tokens else 1)
    names = []
    rest = tokens[2:]
    expect_name = True
    for kind, value, col in rest:
        if expect_name:
            if kind != "NAME":
                raise ParseError(f"expected generator name, got {value!r}", line_no, col)
            if value in names:
                raise ParseError(f"duplicate generator {value!r}", line_no, col)
            names.append(value)
        else:
            if value != ",":
                raise ParseError(f"expected ',', got {value!r}", line_no, col)
        expect_name = not expect_name
    if expect_name or not names:
        raise ParseError("generator list ends badly", line_no, len(gens_line))

    gen_index = {name: i + 1 for i, name in enumerate(names)}
    relators = []
    for line_no, line in lines[1:]:
        tokens = _tokenize(line, line_no)
        if len(tokens) < 2 or tokens[0][1] != "rel" or tokens[1][1] != ":":
            raise ParseError("expected 'rel:' line", line_no, tokens[0][2] if tokens else 1)
        parser = _WordParser(tokens[2:], line_no, gen_index)
        if parser.peek() is None:
            raise ParseError("empty relator expression", line_no, len(line))
        letters = parser.parse_word()
        if parser.peek() is not None:
            tok = parser.peek()
            raise ParseError(f"trailing input {tok[1]!r}", line_no, tok[2])
        word = reduce(letters)
        if not word:
            warnings.warn(f"line {line_no}: relator reduces to the empty word", PresentationWarning)
        relators.append(word)
    return Presentation(tuple(names), tuple(relators))


# ---------------------------------------------------------------------------
# printing


def print_word(w: Word, generator_names) -> str:
    """Render a word in the file grammar (runs collapsed into powers)."""
    if not w:
        return f"{generator_names[0]}^0" if generator_names else ""
    parts = []
    i = 0
    ls = w.letters
    while i < len(ls):
        j = i
        while j < len(ls) and ls[j] == ls[i]:
            j += 1
        count = j - i
        name = generator_names[abs(ls[i]) - 1]
        exp = count if ls[i] > 0 else -count
        parts.append(name if exp == 1 else f"{name}^{exp}")
        i = j
    return "*".join(parts)


def print_presentation(P: Presentation) -> str:
    """Canonical text form; parse_presentation round-trips it."""
    out = ["gens: " + ", ".join(P.generator_names)]
    for r in P.relators:
        out.append("rel: " + print_word(r, P.generator_names))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# deficiency


def p_deficiency(P: Presentation, p: int) -> DeficiencyReport:
    """Exact p-deficiency of this presentation (not a supremum over
    presentations): generators minus the sum of p^-nu_p(r) over relators."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    per = []
    total = Fraction(len(P.generator_names))
    for i, r in enumerate(P.relators):
        nu = nu_p(r, p)
        contrib = Fraction(0) if nu == math.inf else Fraction(1, p**nu)
        per.append((i, nu, contrib))
        total -= contrib
    return DeficiencyReport(p=p, value=total, per_relator=tuple(per))


def deficiency_count(P: Presentation) -> int:
    """Generators minus relators for this presentation."""
    return len(P.generator_names) - len(P.relators)


def quotient_by_words(P: Presentation, extra) -> Presentation:
    """Adjoin words as relators (quotient by their normal closure)."""
    extra = tuple(extra)
    for w in extra:
        if w.max_index() > P.n_generators:
            raise ValueError(f"word uses generator index {w.max_index()}, alphabet has {P.n_generators}")
    return Presentation(P.generator_names, P.relators + extra)


# ---------------------------------------------------------------------------
# Tietze simplification


def _cyclic_key(w: Word):
    """Canonical representative of a relator up to rotation and inversion."""
    core = _cyclic_core(w)
    if not core:
        return ()
    candidates = []
    for ls in (core, tuple(-ell for ell in reversed(core))):
        for k in range(len(ls)):
            candidates.append(ls[k:] + ls[:k])
    return min(candidates)


def _cyclic_core(w: Word) -> tuple[int, ...]:
    ls = w.letters
    i, j = 0, len(ls)
    while j - i >= 2 and ls[i] == -ls[j - 1]:
        i += 1
        j -= 1
    return ls[i:j]


def _substitute(w: Word, gen: int, value: Word) -> Word:
    """Replace generator ``gen`` by ``value`` throughout, then reduce."""
    out: list[int] = []
    vinv = value.inverse().letters
    for ell in w.letters:
        if ell == gen:
            out.extend(value.letters)
        elif ell == -gen:
            out.extend(vinv)
        else:
            out.append(ell)
    return reduce(out)


def _drop_generator(w: Word, gen: int) -> Word:
    """Renumber letters after deleting generator ``gen`` from the alphabet."""
    return Word(tuple(ell - 1 if ell > gen else ell + 1 if ell < -gen else ell for ell in w.letters))


def tietze_simplify(P: Presentation, budget: int = DEFAULT_TIETZE_BUDGET) -> Presentation:
    """Greedy presentation simplification: cyclically reduce relators, drop
    empty and rotation/inversion duplicates, and eliminate a generator when
    some relator expresses it as a word in the others.  Each accepted step
    keeps the total relator length from growing; the result presents an
    isomorphic group.  Stops at a fixpoint or after ``budget`` steps (the
    latter emits TietzeBudgetWarning)."""
    if budget <= 0:
        warnings.warn("simplification budget is empty", TietzeBudgetWarning)
        return P
    names = list(P.generator_names)
    relators = [r for r in P.relators]
    steps = 0

    def spend() -> bool:
        nonlocal steps
        steps += 1
        return steps >= budget

    exhausted = False
    changed = True
    while changed and not exhausted:
        changed = False

        # cyclically reduce (a relator and its cyclic core have the same
        # normal closure) and drop empty relators
        for i, r in enumerate(relators):
            core = _cyclic_core(r)
            if core != r.letters:
                relators[i] = Word(core)
                changed = True
                if spend():
                    exhausted = True
                    break
        if exhausted:
            break
        kept = []
        seen_keys = set()
        for r in relators:
            if not r:
                changed = True
                if spend():
                    exhausted = True
                continue
            key = _cyclic_key(r)
            if key in seen_keys:
                changed = True
                if spend():
                    exhausted = True
                continue
            seen_keys.add(key)
            kept.append(r)
        relators = kept
        if exhausted:
            break
        if changed:
            continue

        # generator elimination: find the cheapest relator rotation of the
        # form g * w with g absent from w, substitute w^-1 for g
        total = sum(len(r) for r in relators)
        best = None  # (new_total, gen, relator_index, replacement)
        for ri, r in enumerate(relators):
            ls = r.letters
            n = len(ls)
            for base in (ls, tuple(-ell for ell in reversed(ls))):
                for k in range(n):
                    rot = base[k:] + base[:k]
                    head, tail = rot[0], rot[1:]
                    g = abs(head)
                    if any(abs(ell) == g for ell in tail):
                        continue
                    # head * tail = 1, so head = tail^-1
                    value = Word(tuple(-ell for ell in reversed(tail)))
                    if head < 0:
                        value = value.inverse()
                    new_total = 0
                    for rj, other in enumerate(relators):
                        if rj == ri:
                            continue
                        new_total += len(_substitute(other, g, value))
                    if new_total <= total and (best is None or (new_total, g, ri) < best[:3]):
                        best = (new_total, g, ri, value)
        if best is not None:
            _, g, ri, value = best
            relators = [_substitute(r, g, value) for i, r in enumerate(relators) if i != ri]
            relators = [_drop_generator(r, g) for r in relators]
            del names[g - 1]
            changed = True
            if spend():
                exhausted = True

    if exhausted:
        warnings.warn(f"simplification stopped after {budget} steps", TietzeBudgetWarning)
    return Presentation(tuple(names), tuple(relators))
