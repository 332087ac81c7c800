"""Parser for bracketed Lie expressions.

Grammar::

    expr := ['+'|'-'] term (('+'|'-') term)*
    term := [rational '*'] atom
    atom := letter | '[' expr ',' expr ']'

Rationals are ``p`` or ``p/q``; whitespace is ignored.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

import pyparsing as pp

from ..core.exceptions import AlphabetError, ExpressionError
from ..core.words import Alphabet, BracketTree
from .freealg import LieElement


@dataclass(frozen=True)
class _Name:
    text: str
    loc: int


@lru_cache(maxsize=1)
def _grammar() -> pp.ParserElement:
    lbrack, rbrack, comma, star = map(pp.Suppress, "[],*")
    name = pp.Word(pp.alphanums + "_").set_parse_action(lambda s, loc, t: _Name(t[0], loc))
    rational = pp.Regex(r"\d+(?:/\d+)?").set_parse_action(lambda t: Fraction(t[0]))
    sign = pp.one_of("+ -")

    expr = pp.Forward()
    bracket = pp.Group(lbrack - expr - comma - expr - rbrack)
    term = pp.Group(pp.Opt(rational + star) + (bracket | name))
    expr <<= pp.Group(pp.Opt(sign) + term + pp.ZeroOrMore(sign + term))
    return expr + pp.StringEnd()


Combination = dict[BracketTree, Fraction]


def _evaluate_expr(tokens: pp.ParseResults, alphabet: Alphabet) -> Combination:
    result: Combination = {}
    items = list(tokens)
    sign = 1
    for item in items:
        if isinstance(item, str):
            sign = -1 if item == "-" else 1
            continue
        for tree, c in _evaluate_term(item, alphabet).items():
            result[tree] = result.get(tree, 0) + sign * c
        sign = 1
    return {tree: c for tree, c in result.items() if c}


def _evaluate_term(tokens: pp.ParseResults, alphabet: Alphabet) -> Combination:
    parts = list(tokens)
    coefficient = Fraction(1)
    if isinstance(parts[0], Fraction):
        coefficient = parts.pop(0)
    atom = parts[0]
    if isinstance(atom, _Name):
        try:
            code = alphabet.code_of(atom.text)
        except AlphabetError as e:
            raise ExpressionError(str(e), atom.loc) from None
        return {BracketTree.leaf(alphabet, code): coefficient}
    left = _evaluate_expr(atom[0], alphabet)
    right = _evaluate_expr(atom[1], alphabet)
    result: Combination = {}
    for s, a in left.items():
        for t, b in right.items():
            tree = BracketTree.pair(s, t)
            result[tree] = result.get(tree, 0) + coefficient * a * b
    return result


def parse_expression(text: str, alphabet: Alphabet) -> LieElement:
    """Parse text such as ``2*[x,[x,y]] - [y,x]`` into a Lie element."""
    try:
        parsed = _grammar().parse_string(text, parse_all=True)
    except pp.ParseBaseException as e:
        raise ExpressionError(f"syntax error: {e.msg}", e.loc, text) from None
    combination = _evaluate_expr(parsed[0], alphabet)
    return LieElement.from_trees([(c, tree) for tree, c in combination.items()], alphabet)


def parse_generators(lines: Iterable[str], alphabet: Alphabet) -> list[LieElement]:
    """One expression per line; blank lines and '#' comments are skipped."""
    elements = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            elements.append(parse_expression(line, alphabet))
        except ExpressionError as e:
            raise ExpressionError(f"line {lineno}: {e.message}", e.position, line) from None
    return elements
