"""
Shared scanning helpers for the three textual notations.

Ordinals (Cantor normal form, ASCII):
- 0            = zero
- 7            = a natural number
- w            = omega
- w^2*3+w+4    = w^2 * 3 + w + 4
- w^(w+1)      = an exponent that is itself a sum needs parentheses

Surreals (run-length sign sequences):
- 0            = the empty sequence
- + - +        = three signs
- +^w -^3      = omega pluses followed by three minuses
- +^(w+3)      = a run count that is a sum needs parentheses

Sets:
- {}                       = the empty set
- {-, +, chain(+^w;-)}     = two elements plus the family {+^w -^i : i < w}

The grammars themselves live next to the values they build
(ordinal.py, sign_seq.py, sets.py); this module only provides the cursor.
"""

from typing import Optional

from surreals.sign_engine.errors import NotationError


class Cursor:
    """
    A position in a piece of notation, with the small set of moves a
    recursive-descent parser needs. Whitespace is skipped between tokens.
    """

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> Optional[str]:
        self.skip_ws()
        if self.pos < len(self.text):
            return self.text[self.pos]
        return None

    def at_end(self) -> bool:
        return self.peek() is None

    def eat(self, token: str) -> bool:
        """Consume `token` if it comes next."""
        self.skip_ws()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str) -> None:
        if not self.eat(token):
            raise self.error(f"expected {token!r}")

    def read_nat(self) -> int:
        """
        Read a decimal natural number. A lone '0' is returned as 0;
        leading zeros are rejected.
        """
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        digits = self.text[start:self.pos]
        if not digits:
            raise self.error("expected a number", start)
        if len(digits) > 1 and digits[0] == "0":
            raise self.error("leading zero", start)
        return int(digits)

    def finish(self) -> None:
        if not self.at_end():
            raise self.error("unexpected trailing input")

    def error(self, message: str, position: Optional[int] = None) -> NotationError:
        return NotationError(message, self.text, self.pos if position is None else position)
