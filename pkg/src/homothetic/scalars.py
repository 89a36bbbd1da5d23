"""Exact scalar rings: the rationals, prime fields and the integers.

Values are plain Python objects: ``Fraction`` over Q, ``int`` over Z, and
``int`` residues in ``[0, p)`` over F_p.  Every arithmetic result is passed
through :meth:`ScalarRing.norm` so that coordinates are always canonical.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

_NAME = re.compile(r"^(?:(Q)|(Z)|F(\d+))$")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class ScalarRing:
    """One of ``Q``, ``Z`` or ``F<p>`` (``kind`` is ``"Q"``, ``"Z"`` or ``"F"``)."""

    kind: str
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("Q", "Z", "F"):
            raise ValueError(f"unknown scalar ring kind {self.kind!r}")
        if self.kind == "F":
            if not (_is_prime(self.p) and self.p < 2**31):
                raise ValueError(f"F{self.p}: modulus must be a prime below 2^31")
        elif self.p != 0:
            raise ValueError("only prime fields carry a modulus")

    @classmethod
    def from_name(cls, name: str) -> ScalarRing:
        m = _NAME.match(name.strip())
        if not m:
            raise ValueError(f"bad scalar ring {name!r}; expected Q, Z or F<p>")
        if m.group(1):
            return QQ
        if m.group(2):
            return ZZ
        return cls("F", int(m.group(3)))

    def __str__(self):
        return f"F{self.p}" if self.kind == "F" else self.kind

    @property
    def is_field(self) -> bool:
        return self.kind != "Z"

    @property
    def zero(self):
        return Fraction(0) if self.kind == "Q" else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == "Q" else 1

    def norm(self, v):
        if self.kind == "F":
            if v.__class__ is int:
                return v % self.p
            if isinstance(v, Fraction):
                if v.denominator != 1:
                    return v.numerator * pow(v.denominator, -1, self.p) % self.p
                v = v.numerator
            return int(v) % self.p
        if self.kind == "Q":
            return v if isinstance(v, Fraction) else Fraction(v)
        if isinstance(v, Fraction):
            if v.denominator != 1:
                raise ValueError(f"{v} is not an integer")
            return v.numerator
        return int(v)

    def inv(self, v):
        v = self.norm(v)
        if not v:
            raise ZeroDivisionError("inverse of zero")
        if self.kind == "F":
            return pow(v, -1, self.p)
        if self.kind == "Q":
            return 1 / v
        if v in (1, -1):
            return v
        raise ZeroDivisionError(f"{v} is not a unit in Z")

    def elements(self):
        """All elements of a prime field, in increasing residue order."""
        if self.kind != "F":
            raise ValueError(f"{self} is infinite")
        return range(self.p)

    def parse(self, text: str):
        """Parse a DSL value: ``a``, ``-a`` or ``a/b``."""
        m = re.fullmatch(r"(-?)(\d+)(?:/(\d+))?", text)
        if not m:
            raise ValueError(f"bad scalar {text!r}")
        sign, num, den = m.groups()
        if den is not None and int(den) == 0:
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        if self.kind == "F":
            if sign or den is not None or int(num) >= self.p:
                raise ValueError(f"{text!r} is not a residue in 0..{self.p - 1}")
            return int(num)
        value = Fraction(int(sign + num), int(den or 1))
        if self.kind == "Z" and value.denominator != 1:
            raise ValueError(f"{text!r} is not an integer")
        return self.norm(value)

    def format(self, v) -> str:
        v = self.norm(v)
        if isinstance(v, Fraction) and v.denominator == 1:
            return str(v.numerator)
        return str(v)


QQ = ScalarRing("Q")
ZZ = ScalarRing("Z")


def GF(p: int) -> ScalarRing:
    return ScalarRing("F", p)
