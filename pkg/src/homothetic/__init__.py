"""Homothetic extensions of algebras, skew derivations and Ore extensions."""

from .algebra import Algebra, Element, LinMap, make_algebra, mul
from .bridge import BridgeContext, probe_type0, verify_diagram
from .checks import CheckFailed, CheckResult, UsageError
from .homext import ExtAlgebra, as_algebra, extension_algebra
from .multiplier import DoubleOperator, HomotheticDatum, make_datum
from .ore import OrePoly, OreRing, gamma, ore_mul
from .scalars import GF, QQ, ZZ, ScalarRing
from .skewderiv import Quintuple, SkewDerivation, solve_deriv_ext, solve_endo_ext

__all__ = [
    "Algebra", "Element", "LinMap", "make_algebra", "mul",
    "BridgeContext", "probe_type0", "verify_diagram",
    "CheckFailed", "CheckResult", "UsageError",
    "ExtAlgebra", "as_algebra", "extension_algebra",
    "DoubleOperator", "HomotheticDatum", "make_datum",
    "OrePoly", "OreRing", "gamma", "ore_mul",
    "GF", "QQ", "ZZ", "ScalarRing",
    "Quintuple", "SkewDerivation", "solve_deriv_ext", "solve_endo_ext",
]
