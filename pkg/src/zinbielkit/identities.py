"""Multilinear identity DSL and its evaluator.

Grammar (whitespace-insensitive)::

    identity := [sign] term ((\"+\" | \"-\") term)* [\"=\" \"0\"]
    term     := [INT [\"/\" INT] \"*\"] tree
    tree     := NAME | \"(\" tree tree \")\"

A tree ``(x y)`` denotes the product x*y of the table under test.  Every
variable must occur exactly once in every term (multilinearity), which is
what justifies checking identities on basis tuples only: a multilinear
identity vanishes on all of the algebra iff it vanishes on every tuple of
basis vectors.

Evaluation walks basis tuples in lexicographic order, so the first reported
residual is a deterministic witness independent of worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Union

from .algebra import AlgebraTable
from .tensors import ZERO, Vector

Tree = Union[str, tuple]


class IdentitySyntaxError(ValueError):
    """Malformed identity source; carries the character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"syntax error at position {position}: {message}")
        self.position = position


class ArityError(ValueError):
    """A term violates the one-use-per-variable rule."""


@dataclass(frozen=True)
class Identity:
    """Ordered variables plus a signed sum of coefficiented product trees."""

    variables: tuple[str, ...]
    terms: tuple[tuple[Fraction, Tree], ...]


@dataclass(frozen=True)
class Residual:
    """A basis assignment where the identity fails, with its exact value."""

    assignment: tuple[int, ...]
    value: Vector


_PUNCT = {"(": "LPAREN", ")": "RPAREN", "+": "PLUS", "-": "MINUS",
          "*": "STAR", "/": "SLASH", "=": "EQ"}


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    while i < len(src):
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _PUNCT:
            tokens.append((_PUNCT[ch], ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(src) and src[j].isdigit():
                j += 1
            tokens.append(("INT", src[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(src) and (src[j].isalnum() or src[j] == "_"):
                j += 1
            tokens.append(("NAME", src[i:j], i))
            i = j
            continue
        raise IdentitySyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(("EOF", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.tokens = _tokenize(src)
        self.pos = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> tuple[str, str, int]:
        tok = self.advance()
        if tok[0] != kind:
            raise IdentitySyntaxError(f"expected {what}, found {tok[1] or 'end of input'}", tok[2])
        return tok

    def parse_tree(self) -> Tree:
        kind, value, pos = self.advance()
        if kind == "NAME":
            return value
        if kind == "LPAREN":
            left = self.parse_tree()
            right = self.parse_tree()
            self.expect("RPAREN", "')'")
            return (left, right)
        raise IdentitySyntaxError(
            f"expected a variable or '(', found {value or 'end of input'}", pos
        )

    def parse_term(self) -> tuple[Fraction, Tree]:
        coeff = Fraction(1)
        if self.peek()[0] == "INT":
            num = int(self.advance()[1])
            den = 1
            if self.peek()[0] == "SLASH":
                self.advance()
                den_tok = self.expect("INT", "a denominator")
                den = int(den_tok[1])
                if den == 0:
                    raise IdentitySyntaxError("zero denominator", den_tok[2])
            self.expect("STAR", "'*' after coefficient")
            coeff = Fraction(num, den)
        return coeff, self.parse_tree()

    def parse_terms(self) -> list[tuple[Fraction, Tree]]:
        terms = []
        sign = Fraction(1)
        if self.peek()[0] in ("PLUS", "MINUS"):
            sign = Fraction(-1) if self.advance()[0] == "MINUS" else Fraction(1)
        coeff, tree = self.parse_term()
        terms.append((sign * coeff, tree))
        while self.peek()[0] in ("PLUS", "MINUS"):
            sign = Fraction(-1) if self.advance()[0] == "MINUS" else Fraction(1)
            coeff, tree = self.parse_term()
            terms.append((sign * coeff, tree))
        return terms


def _leaves(tree: Tree) -> Iterator[str]:
    if isinstance(tree, str):
        yield tree
    else:
        yield from _leaves(tree[0])
        yield from _leaves(tree[1])


def _ordered_variables(terms: list[tuple[Fraction, Tree]]) -> tuple[str, ...]:
    seen: dict[str, None] = {}
    for _, tree in terms:
        for name in _leaves(tree):
            seen.setdefault(name)
    return tuple(seen)


def _validate_arity(variables: tuple[str, ...], terms: list[tuple[Fraction, Tree]]):
    want = set(variables)
    for idx, (_, tree) in enumerate(terms, start=1):
        counts: dict[str, int] = {}
        for name in _leaves(tree):
            counts[name] = counts.get(name, 0) + 1
        for name, count in counts.items():
            if count > 1:
                raise ArityError(f"variable {name!r} appears {count} times in term {idx}")
        missing = want - counts.keys()
        if missing:
            raise ArityError(
                f"term {idx} is missing variable(s) {', '.join(sorted(missing))}"
            )


def parse_term_sum(src: str) -> tuple[tuple[str, ...], tuple[tuple[Fraction, Tree], ...]]:
    """Parse a signed sum of trees without the arity check (for claim sides)."""
    parser = _Parser(src)
    terms = parser.parse_terms()
    tok = parser.peek()
    if tok[0] != "EOF":
        raise IdentitySyntaxError(f"unexpected trailing input {tok[1]!r}", tok[2])
    return _ordered_variables(terms), tuple(terms)


def parse_identity(src: str) -> Identity:
    """Parse and validate an identity; accepts an optional '= 0' suffix."""
    parser = _Parser(src)
    terms = parser.parse_terms()
    if parser.peek()[0] == "EQ":
        parser.advance()
        tok = parser.expect("INT", "'0' after '='")
        if tok[1] != "0":
            raise IdentitySyntaxError("right-hand side must be 0", tok[2])
    tok = parser.peek()
    if tok[0] != "EOF":
        raise IdentitySyntaxError(f"unexpected trailing input {tok[1]!r}", tok[2])
    variables = _ordered_variables(terms)
    _validate_arity(variables, terms)
    return Identity(variables, tuple(terms))


def render_tree(tree: Tree) -> str:
    if isinstance(tree, str):
        return tree
    return f"({render_tree(tree[0])} {render_tree(tree[1])})"


def render_identity(identity: Identity) -> str:
    """Canonical source text; parse_identity(render_identity(i)) == i."""
    parts = []
    for idx, (coeff, tree) in enumerate(identity.terms):
        mag = abs(coeff)
        body = render_tree(tree) if mag == 1 else f"{mag} * {render_tree(tree)}"
        if idx == 0:
            parts.append(body if coeff > 0 else f"- {body}")
        else:
            parts.append(f"{'+' if coeff > 0 else '-'} {body}")
    return " ".join(parts)


def eval_terms_raw(
    algebra: AlgebraTable,
    terms: tuple[tuple[Fraction, Tree], ...],
    env: dict[str, dict],
) -> dict:
    """Raw coefficient dict of a term sum under a variable environment."""

    def eval_tree(tree: Tree) -> dict:
        if isinstance(tree, str):
            return env[tree]
        return algebra.multiply_raw(eval_tree(tree[0]), eval_tree(tree[1]))

    acc: dict[int, Fraction] = {}
    for coeff, tree in terms:
        for k, v in eval_tree(tree).items():
            s = acc.get(k, ZERO) + coeff * v
            if s:
                acc[k] = s
            elif k in acc:
                del acc[k]
    return acc


def _scan(algebra: AlgebraTable, identity: Identity, assignments) -> list[Residual]:
    one = Fraction(1)
    out = []
    variables = identity.variables
    for assignment in assignments:
        env = {name: {idx: one} for name, idx in zip(variables, assignment)}
        acc = eval_terms_raw(algebra, identity.terms, env)
        if acc:
            out.append(Residual(assignment, Vector(algebra.dim, acc)))
    return out


def evaluate(
    algebra: AlgebraTable,
    identity: Identity,
    *,
    first_only: bool = False,
    workers: int = 1,
) -> list[Residual]:
    """All residuals of the identity over basis tuples, in lexicographic order.

    ``first_only`` stops at the first violation (the deterministic witness).
    ``workers`` > 1 partitions the tuple space; the merge is order-preserving,
    so the result is identical for any worker count.
    """
    nvars = len(identity.variables)
    if algebra.dim == 0:
        return []
    assignments = product(range(algebra.dim), repeat=nvars)
    if first_only:
        one = Fraction(1)
        for assignment in assignments:
            env = {name: {idx: one} for name, idx in zip(identity.variables, assignment)}
            acc = eval_terms_raw(algebra, identity.terms, env)
            if acc:
                return [Residual(assignment, Vector(algebra.dim, acc))]
        return []
    if workers <= 1:
        return _scan(algebra, identity, assignments)
    all_assignments = list(assignments)
    chunk = max(1, -(-len(all_assignments) // workers))
    pieces = [all_assignments[i : i + chunk] for i in range(0, len(all_assignments), chunk)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = pool.map(lambda piece: _scan(algebra, identity, piece), pieces)
        return [r for piece in results for r in piece]


def holds(algebra: AlgebraTable, identity: Identity) -> bool:
    return not evaluate(algebra, identity, first_only=True)


# Named identities.  left_relation / right_relation keep the contested labels
# they usually travel under; the audit evaluates both on every table rather
# than trusting the attribution.  derived_1..derived_4 are the element forms
# of the standard tensor-map consequences of the half-shuffle law.
_CATALOG_SOURCES = {
    "left_zinbiel": "((x y) z) - (x (y z)) - (x (z y))",
    "right_zinbiel": "(x (y z)) - ((x y) z) - ((y x) z)",
    "left_relation": "(x (y z)) - (y (x z))",
    "right_relation": "((x y) z) - ((x z) y)",
    "derived_1": "(x (z y)) - ((x z) y) - ((z x) y)",
    "derived_2": "(z (x y)) - ((x z) y) - ((z x) y)",
    "derived_3": "(z (y x)) - ((y z) x) - ((z y) x)",
    "derived_4": "(x (y z)) - (y (x z))",
    "commutative": "(x y) - (y x)",
    "associative": "((x y) z) - (x (y z))",
    "jacobi": "(x (y z)) + (y (z x)) + (z (x y))",
    "center_symmetric": "((x y) z) - (x (y z)) - ((z y) x) + (z (y x))",
    "lie_admissible": (
        "(x (y z)) - (x (z y)) - ((y z) x) + ((z y) x) "
        "+ (y (z x)) - (y (x z)) - ((z x) y) + ((x z) y) "
        "+ (z (x y)) - (z (y x)) - ((x y) z) + ((y x) z)"
    ),
}

_catalog_cache: dict[str, Identity] | None = None


def catalog() -> dict[str, Identity]:
    """Named identity collection; every entry round-trips through the parser."""
    global _catalog_cache
    if _catalog_cache is None:
        _catalog_cache = {name: parse_identity(src) for name, src in _CATALOG_SOURCES.items()}
    return dict(_catalog_cache)


def catalog_source(name: str) -> str:
    return _CATALOG_SOURCES[name]
