"""
Sentence parsing and printing.

Grammar (loosest first): `<->` (left-assoc), `->` (right-assoc), `|`, `&`,
prefix `!`; constants `T` and `F`; atoms are identifiers.
"""

from typing import List, Optional, Tuple

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedInput, UnexpectedToken

from app.errors import SentenceSyntaxError, UnknownAtomError
from app.models.logic import (
    And,
    Atom,
    Bot,
    Iff,
    Implies,
    Not,
    Or,
    Sentence,
    Top,
    Vocabulary,
)

SENTENCE_GRAMMAR = r"""
    ?start: equiv

    ?equiv: implication
          | equiv "<->" implication      -> iff

    ?implication: disjunction
                | disjunction "->" implication   -> implies

    ?disjunction: conjunction
                | disjunction "|" conjunction    -> or_

    ?conjunction: negation
                | conjunction "&" negation       -> and_

    ?negation: "!" negation              -> not_
             | primary

    ?primary: NAME                       -> name
            | "(" equiv ")"

    NAME: /[A-Za-z_][A-Za-z0-9_]*/

    %import common.WS
    %ignore WS
"""

_SYMBOLS = {And: "&", Or: "|", Implies: "->", Iff: "<->"}


@v_args(inline=True)
class _SentenceBuilder(Transformer):
    """Turns the parse tree into Sentence nodes."""

    def name(self, token):
        if token == "T":
            return Top()
        if token == "F":
            return Bot()
        return Atom(str(token))

    def not_(self, operand):
        return Not(operand)

    def and_(self, left, right):
        return And(left, right)

    def or_(self, left, right):
        return Or(left, right)

    def implies(self, left, right):
        return Implies(left, right)

    def iff(self, left, right):
        return Iff(left, right)


class SentenceParser:
    """
    LALR parser for the sentence language.

    Syntax errors carry the 1-based index of the offending token and its
    column; unknown atoms are reported by name.
    """

    def __init__(self):
        self._lark = Lark(SENTENCE_GRAMMAR, parser="lalr", lexer="basic")
        self._builder = _SentenceBuilder()

    def parse(self, text: str, vocabulary: Optional[Vocabulary] = None) -> Sentence:
        try:
            tree = self._lark.parse(text)
        except UnexpectedInput as exc:
            raise self._syntax_error(text, exc) from None
        sentence = self._builder.transform(tree)
        if vocabulary is not None:
            for atom in atoms_of(sentence):
                if atom not in vocabulary.atoms:
                    raise UnknownAtomError(atom, vocabulary.atoms)
        return sentence

    def _syntax_error(self, text: str, exc: UnexpectedInput) -> SentenceSyntaxError:
        if isinstance(exc, UnexpectedToken) and exc.token.type == "$END":
            position, detail = len(text), "unexpected end of input"
        elif isinstance(exc, UnexpectedToken):
            position, detail = exc.token.start_pos, f"unexpected '{exc.token}'"
        elif isinstance(exc, UnexpectedCharacters):
            position, detail = exc.pos_in_stream, f"unexpected character '{text[exc.pos_in_stream]}'"
        else:
            position, detail = len(text), "malformed sentence"
        return SentenceSyntaxError(text, self._token_index(text, position), position + 1, detail)

    def _token_index(self, text: str, position: int) -> int:
        """1-based index of the token starting at `position`."""
        before = 0
        try:
            for token in self._lark.lex(text):
                if token.start_pos >= position:
                    break
                before += 1
        except UnexpectedInput:
            pass
        return before + 1


_parser = SentenceParser()


def parse_sentence(text: str, vocabulary: Optional[Vocabulary] = None) -> Sentence:
    """Parse `text`; atoms are checked against `vocabulary` when one is given."""
    return _parser.parse(text, vocabulary)


def atoms_of(sentence: Sentence) -> Tuple[str, ...]:
    """Distinct atom names in order of first occurrence."""
    seen: List[str] = []
    stack = [sentence]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            if node.name not in seen:
                seen.append(node.name)
        elif isinstance(node, Not):
            stack.append(node.operand)
        elif isinstance(node, (And, Or, Implies, Iff)):
            stack.append(node.right)
            stack.append(node.left)
    return tuple(seen)


def format_sentence(sentence: Sentence) -> str:
    """
    Print with as few parentheses as re-parsing allows, except that a binary
    child of a different connective is always bracketed.
    """
    if isinstance(sentence, Atom):
        return sentence.name
    if isinstance(sentence, Top):
        return "T"
    if isinstance(sentence, Bot):
        return "F"
    if isinstance(sentence, Not):
        inner = format_sentence(sentence.operand)
        if isinstance(sentence.operand, (And, Or, Implies, Iff)):
            inner = f"({inner})"
        return f"!{inner}"

    kind = type(sentence)
    left, right = format_sentence(sentence.left), format_sentence(sentence.right)
    # -> groups to the right, the others to the left
    if _is_binary(sentence.left) and (type(sentence.left) is not kind or kind is Implies):
        left = f"({left})"
    if _is_binary(sentence.right) and (type(sentence.right) is not kind or kind is not Implies):
        right = f"({right})"
    return f"{left} {_SYMBOLS[kind]} {right}"


def _is_binary(sentence: Sentence) -> bool:
    return isinstance(sentence, (And, Or, Implies, Iff))
