"""Check results with witnesses, and the exception hierarchy.

Every verifier in the package returns a :class:`CheckResult`.  It is truthy
exactly when the check passed; on failure it carries a witness naming the
identity that failed, where it failed, and both evaluated sides.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    witness: dict | None = None
    detail: str = ""

    def __bool__(self):
        return self.ok

    def describe(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        line = f"{status} {self.name}"
        if self.detail:
            line += f" ({self.detail})"
        if self.witness:
            parts = ", ".join(f"{k}={_show(v)}" for k, v in self.witness.items())
            line += f": {parts}"
        return line

    def to_dict(self) -> dict:
        out = {"name": self.name, "ok": self.ok}
        if self.detail:
            out["detail"] = self.detail
        if self.witness:
            out["witness"] = {k: _show(v) for k, v in self.witness.items()}
        return out


def passed(name: str, detail: str = "") -> CheckResult:
    return CheckResult(name, True, None, detail)


def failed(name: str, detail: str = "", **witness) -> CheckResult:
    return CheckResult(name, False, witness, detail)


def all_of(name: str, results) -> CheckResult:
    """Combine results; the first failure becomes the witness."""
    results = list(results)
    for r in results:
        if not r:
            return CheckResult(name, False, {"failed": r.name, **(r.witness or {})}, r.detail)
    return passed(name)


def _show(v) -> str:
    if isinstance(v, tuple):
        return "(" + ", ".join(_show(x) for x in v) + ")"
    return str(v)


class HomotheticError(Exception):
    """Base class for all errors raised by this package."""


class CheckFailed(HomotheticError):
    """A mathematical condition failed; ``result`` holds the witness."""

    def __init__(self, result: CheckResult, message: str | None = None):
        self.result = result
        super().__init__(message or result.describe())


class UsageError(HomotheticError, ValueError):
    """Bad input: wrong shape, mismatched objects, unsupported scalars."""


class AssociativityViolation(CheckFailed):
    pass


class NotHomothetism(CheckFailed):
    pass


class CommutationFails(CheckFailed):
    pass


class QuadraticFails(CheckFailed):
    pass


class ConditionsFail(CheckFailed):
    pass


class EndoPreconditionFailed(CheckFailed):
    pass


class NotSkewDerivation(CheckFailed):
    pass


class NotBimultiplication(CheckFailed):
    pass


class NotRestrictable(CheckFailed):
    pass


class NonIdempotentVarsigma(CheckFailed):
    pass


class BadShape(UsageError):
    pass


class AlgebraMismatch(UsageError):
    pass


class DomainMismatch(UsageError):
    pass


class RingMismatch(UsageError):
    pass


class NotAField(UsageError):
    pass


class BadVarsigma(UsageError):
    pass


class MuConstraintViolated(UsageError):
    pass


class EnumerationBudgetExceeded(UsageError):
    pass


class IndexOutOfRange(UsageError):
    pass


class ContextNotType1(UsageError):
    pass


class BadN(UsageError):
    pass


class BadK(UsageError):
    pass


class BadFamilyParams(UsageError):
    pass
