"""Line-oriented text format for algebras, maps, double operators, data,
quintuples and Ore polynomials.

::

    # comment
    algebra A field F2 dim 2 basis u v
    sc 1 1 1 1
    end
    map f on A
    1 0
    0 0
    end
    dop sigma on A left f right f
    datum D dop sigma s 0 0
    quintuple Q datum D alpha f delta z w 0 0 e 0 0 varsigma 1 mu 0
    orepoly P on A alpha f delta z coeffs [ 1 0 ; 0 1 ]

``sc i j k VALUE`` is 1-based and omitted entries are 0.  Map rows are matrix
rows: row ``r`` holds the ``r``-th coordinate of the images of ``b_1 .. b_D``.
A value is ``a``, ``-a`` or ``a/b``; over ``F<p>`` only residues ``0..p-1``.

Definitions are stored unverified, so a document describing a failing datum
still parses; the checks run when the objects are built.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .algebra import Algebra, LinMap, make_algebra
from .checks import UsageError
from .multiplier import DoubleOperator, HomotheticDatum
from .ore import OrePoly, OreRing
from .scalars import ScalarRing


class ParseError(UsageError):
    def __init__(self, message: str, line: int = 0, column: int = 0, expected: str | None = None):
        self.line, self.column, self.expected = line, column, expected
        where = f"line {line}, column {column}: " if line else ""
        tail = f" (expected {expected})" if expected else ""
        super().__init__(f"{where}{message}{tail}")


class DivByZeroDenominator(ParseError):
    pass


class UnresolvedName(ParseError):
    pass


@dataclass(frozen=True)
class AlgebraDef:
    name: str
    scalars: ScalarRing
    dim: int
    labels: tuple | None
    entries: tuple  # sorted ((i, j, k), value) with 0-based indices, nonzero values


@dataclass(frozen=True)
class MapDef:
    name: str
    algebra: str
    rows: tuple


@dataclass(frozen=True)
class DopDef:
    name: str
    algebra: str
    left: str
    right: str


@dataclass(frozen=True)
class DatumDef:
    name: str
    dop: str
    s: tuple


@dataclass(frozen=True)
class QuintupleDef:
    name: str
    datum: str
    alpha: str
    delta: str
    w: tuple
    e: tuple
    varsigma: object
    mu: object


@dataclass(frozen=True)
class OrePolyDef:
    name: str
    algebra: str
    alpha: str
    delta: str
    coeffs: tuple


KINDS = {AlgebraDef: "algebra", MapDef: "map", DopDef: "dop", DatumDef: "datum",
         QuintupleDef: "quintuple", OrePolyDef: "orepoly"}


@dataclass(frozen=True)
class Document:
    defs: tuple

    def __post_init__(self):
        object.__setattr__(self, "_cache", {})

    def __eq__(self, other):
        return isinstance(other, Document) and self.defs == other.defs

    def __hash__(self):
        return hash(self.defs)

    def names(self) -> list[str]:
        return [d.name for d in self.defs]

    def get(self, name: str, kind=None):
        for d in self.defs:
            if d.name == name:
                if kind is not None and not isinstance(d, kind):
                    raise UnresolvedName(f"{name!r} is a {KINDS[type(d)]}, not a {KINDS[kind]}")
                return d
        raise UnresolvedName(f"no definition named {name!r}")

    def first(self, kind):
        for d in self.defs:
            if isinstance(d, kind):
                return d
        raise UnresolvedName(f"document has no {KINDS[kind]} definition")

    def of_kind(self, kind) -> list:
        return [d for d in self.defs if isinstance(d, kind)]

    def _memo(self, key, build):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    def algebra(self, name: str) -> Algebra:
        d = self.get(name, AlgebraDef)

        def build():
            sc = [[[0] * d.dim for _ in range(d.dim)] for _ in range(d.dim)]
            for (i, j, k), v in d.entries:
                sc[i][j][k] = v
            return make_algebra(d.dim, sc, d.scalars, d.labels, name=d.name)

        return self._memo(("algebra", name), build)

    def linmap(self, name: str) -> LinMap:
        d = self.get(name, MapDef)
        A = self.algebra(d.algebra)
        return self._memo(("map", name), lambda: LinMap(A, A, d.rows))

    def dop(self, name: str) -> DoubleOperator:
        d = self.get(name, DopDef)
        return self._memo(("dop", name), lambda: DoubleOperator(self.linmap(d.left), self.linmap(d.right)))

    def datum_parts(self, name: str):
        d = self.get(name, DatumDef)
        sigma = self.dop(d.dop)
        return sigma, sigma.algebra.element(d.s)

    def datum(self, name: str) -> HomotheticDatum:
        """Builds and verifies; raises a ``CheckFailed`` subclass if the axioms fail."""
        return self._memo(("datum", name), lambda: HomotheticDatum(*self.datum_parts(name)))

    def quintuple_parts(self, name: str) -> dict:
        d = self.get(name, QuintupleDef)
        datum = self.datum(d.datum)
        A = datum.algebra
        return {"datum": datum, "alpha": self.linmap(d.alpha), "w": A.element(d.w),
                "delta": self.linmap(d.delta), "e": A.element(d.e),
                "varsigma": d.varsigma, "mu": d.mu}

    def orepoly(self, name: str) -> OrePoly:
        d = self.get(name, OrePolyDef)
        key = ("ring", d.alpha, d.delta)
        ring = self._memo(key, lambda: OreRing(self.linmap(d.alpha), self.linmap(d.delta)))
        return ring.poly(d.coeffs)


_TOKEN = re.compile(r"\S+")


class _Line:
    def __init__(self, number: int, text: str):
        self.number = number
        self.tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(text)]
        self.pos = 0

    def error(self, message, expected=None, cls=ParseError):
        col = self.tokens[self.pos][1] if self.pos < len(self.tokens) else (
            self.tokens[-1][1] + len(self.tokens[-1][0]) if self.tokens else 1)
        return cls(message, self.number, col, expected)

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def next(self, expected: str) -> str:
        if self.pos >= len(self.tokens):
            raise self.error("unexpected end of line", expected)
        tok = self.tokens[self.pos][0]
        self.pos += 1
        return tok

    def keyword(self, word: str):
        tok = self.peek()
        if tok != word:
            raise self.error(f"found {tok!r}" if tok else "unexpected end of line", repr(word))
        self.pos += 1

    def name(self) -> str:
        tok = self.peek()
        if tok is None or not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_.\-]*", tok):
            raise self.error(f"bad name {tok!r}" if tok else "unexpected end of line", "a name")
        self.pos += 1
        return tok

    def integer(self, what: str) -> int:
        tok = self.peek()
        if tok is None or not tok.isdigit():
            raise self.error(f"found {tok!r}" if tok else "unexpected end of line", what)
        self.pos += 1
        return int(tok)

    def value(self, scalars: ScalarRing):
        tok = self.peek()
        if tok is None:
            raise self.error("unexpected end of line", "a value")
        try:
            v = scalars.parse(tok)
        except ZeroDivisionError:
            raise self.error(f"zero denominator in {tok!r}", cls=DivByZeroDenominator) from None
        except ValueError as exc:
            raise self.error(str(exc), f"a value in {scalars}") from None
        self.pos += 1
        return v

    def values(self, scalars: ScalarRing, count: int) -> tuple:
        return tuple(self.value(scalars) for _ in range(count))

    def done(self):
        if self.pos < len(self.tokens):
            raise self.error(f"trailing token {self.tokens[self.pos][0]!r}", "end of line")


def _lines(text: str):
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if line.strip():
            yield _Line(number, line)


def parse(text: str) -> Document:
    defs: list = []
    by_name: dict = {}
    lines = _lines(text)

    def ref(line: _Line, kind):
        name = line.name()
        d = by_name.get(name)
        if d is None:
            line.pos -= 1
            raise line.error(f"unresolved name {name!r}", f"an earlier {KINDS[kind]}", UnresolvedName)
        if not isinstance(d, kind):
            line.pos -= 1
            raise line.error(f"{name!r} is a {KINDS[type(d)]}", f"a {KINDS[kind]}", UnresolvedName)
        return d

    def block_lines(header: _Line, what: str):
        for line in lines:
            if line.peek() == "end":
                line.pos += 1
                line.done()
                return
            yield line
        raise ParseError(f"{what} block opened here is not closed", header.number, 1, "'end'")

    for line in lines:
        kw = line.next("a definition keyword")
        if kw == "algebra":
            name = line.name()
            line.keyword("field")
            ftok = line.next("Q, Z or F<p>")
            try:
                scalars = ScalarRing.from_name(ftok)
            except ValueError as exc:
                line.pos -= 1
                raise line.error(str(exc), "Q, Z or F<p>") from None
            line.keyword("dim")
            dim = line.integer("a dimension")
            if dim < 1:
                line.pos -= 1
                raise line.error("dimension must be positive", "a positive integer")
            labels = None
            if line.peek() == "basis":
                line.pos += 1
                labels = tuple(line.name() for _ in range(dim))
            line.done()
            entries = {}
            for body in block_lines(line, "algebra"):
                body.keyword("sc")
                idx = []
                for _ in range(3):
                    i = body.integer("an index")
                    if not 1 <= i <= dim:
                        body.pos -= 1
                        raise body.error(f"index {i} out of range", f"1..{dim}")
                    idx.append(i - 1)
                v = body.value(scalars)
                body.done()
                entries[tuple(idx)] = v
            d = AlgebraDef(name, scalars, dim, labels, tuple(sorted((k, v) for k, v in entries.items() if v)))
        elif kw == "map":
            name = line.name()
            line.keyword("on")
            alg = ref(line, AlgebraDef)
            line.done()
            rows = []
            for body in block_lines(line, "map"):
                rows.append(body.values(alg.scalars, alg.dim))
                body.done()
            if len(rows) != alg.dim:
                raise ParseError(f"map {name} has {len(rows)} rows", line.number, 1, f"{alg.dim} rows")
            d = MapDef(name, alg.name, tuple(rows))
        elif kw == "dop":
            name = line.name()
            line.keyword("on")
            alg = ref(line, AlgebraDef)
            line.keyword("left")
            left = ref(line, MapDef)
            line.keyword("right")
            right = ref(line, MapDef)
            line.done()
            for m in (left, right):
                if m.algebra != alg.name:
                    raise ParseError(f"map {m.name} is on {m.algebra}, not {alg.name}", line.number, 1)
            d = DopDef(name, alg.name, left.name, right.name)
        elif kw == "datum":
            name = line.name()
            line.keyword("dop")
            dop = ref(line, DopDef)
            alg = by_name[dop.algebra]
            line.keyword("s")
            s = line.values(alg.scalars, alg.dim)
            line.done()
            d = DatumDef(name, dop.name, s)
        elif kw == "quintuple":
            name = line.name()
            line.keyword("datum")
            dat = ref(line, DatumDef)
            alg = by_name[by_name[dat.dop].algebra]
            line.keyword("alpha")
            alpha = ref(line, MapDef)
            line.keyword("delta")
            delta = ref(line, MapDef)
            line.keyword("w")
            w = line.values(alg.scalars, alg.dim)
            line.keyword("e")
            e = line.values(alg.scalars, alg.dim)
            line.keyword("varsigma")
            tok = line.peek()
            if tok not in ("0", "1"):
                raise line.error(f"found {tok!r}", "0 or 1")
            line.pos += 1
            line.keyword("mu")
            mu = line.value(alg.scalars)
            line.done()
            d = QuintupleDef(name, dat.name, alpha.name, delta.name, w, e, alg.scalars.norm(int(tok)), mu)
        elif kw == "orepoly":
            name = line.name()
            line.keyword("on")
            alg = ref(line, AlgebraDef)
            line.keyword("alpha")
            alpha = ref(line, MapDef)
            line.keyword("delta")
            delta = ref(line, MapDef)
            line.keyword("coeffs")
            line.keyword("[")
            coeffs = []
            if line.peek() == "]":
                line.pos += 1
            else:
                while True:
                    coeffs.append(line.values(alg.scalars, alg.dim))
                    tok = line.next("';' or ']'")
                    if tok == "]":
                        break
                    if tok != ";":
                        line.pos -= 1
                        raise line.error(f"found {tok!r}", "';' or ']'")
            line.done()
            d = OrePolyDef(name, alg.name, alpha.name, delta.name, tuple(coeffs))
        else:
            line.pos -= 1
            raise line.error(f"unknown keyword {kw!r}", "algebra, map, dop, datum, quintuple or orepoly")
        if d.name in by_name:
            raise ParseError(f"duplicate name {d.name!r}", line.number, line.tokens[1][1])
        by_name[d.name] = d
        defs.append(d)
    return Document(tuple(defs))


def _vals(values, scalars: ScalarRing) -> str:
    return " ".join(scalars.format(v) for v in values)


def serialize(doc: Document) -> str:
    out = []
    algs = {d.name: d for d in doc.of_kind(AlgebraDef)}

    def scal(alg_name):
        return algs[alg_name].scalars

    def dop_alg(dop_name):
        return doc.get(dop_name, DopDef).algebra

    for d in doc.defs:
        if isinstance(d, AlgebraDef):
            head = f"algebra {d.name} field {d.scalars} dim {d.dim}"
            if d.labels is not None:
                head += " basis " + " ".join(d.labels)
            out.append(head)
            for (i, j, k), v in d.entries:
                out.append(f"sc {i + 1} {j + 1} {k + 1} {d.scalars.format(v)}")
            out.append("end")
        elif isinstance(d, MapDef):
            out.append(f"map {d.name} on {d.algebra}")
            out.extend(_vals(row, scal(d.algebra)) for row in d.rows)
            out.append("end")
        elif isinstance(d, DopDef):
            out.append(f"dop {d.name} on {d.algebra} left {d.left} right {d.right}")
        elif isinstance(d, DatumDef):
            out.append(f"datum {d.name} dop {d.dop} s {_vals(d.s, scal(dop_alg(d.dop)))}")
        elif isinstance(d, QuintupleDef):
            sc = scal(dop_alg(doc.get(d.datum, DatumDef).dop))
            out.append(f"quintuple {d.name} datum {d.datum} alpha {d.alpha} delta {d.delta} "
                       f"w {_vals(d.w, sc)} e {_vals(d.e, sc)} varsigma {sc.format(d.varsigma)} "
                       f"mu {sc.format(d.mu)}")
        elif isinstance(d, OrePolyDef):
            sc = scal(d.algebra)
            body = " ; ".join(_vals(c, sc) for c in d.coeffs)
            out.append(f"orepoly {d.name} on {d.algebra} alpha {d.alpha} delta {d.delta} coeffs [ {body} ]"
                       if body else f"orepoly {d.name} on {d.algebra} alpha {d.alpha} delta {d.delta} coeffs [ ]")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- building documents from objects


class DocumentBuilder:
    """Collects definitions from live objects, naming them in order of appearance."""

    def __init__(self):
        self.defs: list = []
        self._names: set = set()

    def _add(self, d):
        if d.name in self._names:
            raise UsageError(f"duplicate name {d.name!r}")
        self._names.add(d.name)
        self.defs.append(d)
        return d.name

    def algebra(self, A: Algebra, name: str | None = None) -> str:
        entries = tuple(sorted(((i, j, k), v) for i, row in enumerate(A.sc) for j, vec in enumerate(row)
                               for k, v in enumerate(vec) if v))
        default = tuple(f"b{i + 1}" for i in range(A.dim))
        labels = None if A.labels == default else A.labels
        return self._add(AlgebraDef(name or A.name, A.scalars, A.dim, labels, entries))

    def linmap(self, f: LinMap, alg: str, name: str) -> str:
        return self._add(MapDef(name, alg, f.matrix))

    def dop(self, sigma: DoubleOperator, alg: str, name: str) -> str:
        left = self.linmap(sigma.left, alg, f"{name}_left")
        right = self.linmap(sigma.right, alg, f"{name}_right")
        return self._add(DopDef(name, alg, left, right))

    def datum(self, dop: str, s, name: str) -> str:
        return self._add(DatumDef(name, dop, tuple(s.coords)))

    def quintuple(self, q, datum: str, alpha: str, delta: str, name: str) -> str:
        return self._add(QuintupleDef(name, datum, alpha, delta, tuple(q.w.coords), tuple(q.e.coords),
                                      q.varsigma, q.mu))

    def orepoly(self, p: OrePoly, alg: str, alpha: str, delta: str, name: str) -> str:
        return self._add(OrePolyDef(name, alg, alpha, delta, tuple(tuple(c.coords) for c in p.coeffs)))

    def document(self) -> Document:
        return Document(tuple(self.defs))
