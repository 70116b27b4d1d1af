"""The algebra-definition text format and the canonical JSON documents.

Grammar (EBNF):

    file        := algebra+
    algebra     := "algebra" IDENT "{" decl+ "}"
    decl        := "elements" ":" carrier | "zero" ":" atom
                 | opdef | "builder" ":" builderexpr
    carrier     := INT ".." INT | "[" atom ("," atom)* "]"
    atom        := IDENT | RATIONAL | INT
    opdef       := ("neg"|"add"|"mul")
                   ( "(" IDENT ("," IDENT)? ")" "=" expr | ":" tablelit )
    expr        := sum of products of atoms, variables, "min(..)", "max(..)",
                   parenthesized subexpressions; operators "+", "-", "*"
    tablelit    := "[" (atom | "[" atom ("," atom)* "]") ("," ...)* "]"
    builderexpr := IDENT "(" arg ("," arg)* ")"
    arg         := INT | IDENT | "[" INT ("," INT)* "]" | builderexpr

Formulas are evaluated with exact rational arithmetic over the whole
carrier; any value that leaves the carrier raises a closure violation
with the witness inputs.  Serialization is canonical (fixed key order,
sorted arrays) so two runs produce identical bytes.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from . import builders, core, frames, ideals, spectrum
from .core import FiniteMvwRig
from .errors import (
    AxiomViolation,
    ClosureViolation,
    DslSyntaxError,
    SchemaError,
)


@dataclass(frozen=True)
class ParseDiagnostic:
    severity: str
    line: int
    column: int
    message: str
    witness: tuple = ()

    def __str__(self):
        return f"{self.line}:{self.column}: {self.severity}: {self.message}"


def _err(line, column, message, witness=()):
    raise DslSyntaxError(ParseDiagnostic("error", line, column, message, witness))


# -- tokens -------------------------------------------------------------------

_TOKEN_RE = re.compile(r"""
    (?P<WS>\s+)
  | (?P<RATIONAL>\d+/\d+)
  | (?P<RANGE>\.\.)
  | (?P<INT>\d+)
  | (?P<IDENT>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<PUNCT>[{}()\[\],:=+\-*])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, col, pos = 1, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            _err(line, col, f"unexpected character {text[pos]!r}")
        kind = m.lastgroup
        value = m.group()
        if kind != "WS":
            tokens.append(Token("PUNCT" if kind == "PUNCT" else kind, value, line, col))
        newlines = value.count("\n")
        if newlines:
            line += newlines
            col = len(value) - value.rfind("\n")
        else:
            col += len(value)
        pos = m.end()
    tokens.append(Token("EOF", "", line, col))
    return tokens


# -- syntax trees --------------------------------------------------------------

@dataclass(frozen=True)
class NumberAtom:
    value: Fraction

    def text(self):
        return str(self.value)


@dataclass(frozen=True)
class NameAtom:
    name: str

    def text(self):
        return self.name


@dataclass(frozen=True)
class RangeCarrier:
    lo: int
    hi: int


@dataclass(frozen=True)
class ListCarrier:
    atoms: tuple


@dataclass(frozen=True)
class Lit:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class MinMax:
    fn: str
    args: tuple


@dataclass(frozen=True)
class FormulaOp:
    params: tuple
    body: object


@dataclass(frozen=True)
class TableOp:
    entries: tuple
    nested: bool


@dataclass(frozen=True)
class NameRef:
    name: str


@dataclass(frozen=True)
class VectorArg:
    values: tuple


@dataclass(frozen=True)
class BuilderExpr:
    fn: str
    args: tuple


@dataclass(frozen=True)
class AlgebraSource:
    name: str
    carrier: object = None
    zero: object = None
    ops: tuple = ()              # ((opname, FormulaOp|TableOp), ...)
    builder: object = None
    span: tuple = field(default=(0, 0), compare=False)

    def op(self, name):
        for key, value in self.ops:
            if key == name:
                return value
        return None


# -- parser ---------------------------------------------------------------------

_OP_NAMES = ("neg", "add", "mul")
_DECL_KEYS = ("elements", "zero", "builder") + _OP_NAMES


class _Parser:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected):
        tok = self.peek()
        shown = tok.value if tok.kind != "EOF" else "end of input"
        _err(tok.line, tok.column,
             f"expected {' or '.join(expected)}, found {shown!r}")

    def expect(self, value=None, kind=None, expected=None):
        tok = self.peek()
        if value is not None and tok.value != value:
            self.fail(expected or [repr(value)])
        if kind is not None and tok.kind != kind:
            self.fail(expected or [kind])
        return self.advance()

    def at(self, value):
        return self.peek().value == value

    # file := algebra+
    def parse_file(self):
        sources = [self.parse_algebra()]
        while self.peek().kind != "EOF":
            sources.append(self.parse_algebra())
        return sources

    def parse_algebra(self):
        head = self.expect(value="algebra", expected=["'algebra'"])
        name = self.expect(kind="IDENT", expected=["an algebra name"]).value
        self.expect(value="{", expected=["'{'"])
        carrier = zero = builder = None
        ops = []
        seen = set()
        while not self.at("}"):
            tok = self.peek()
            if tok.kind != "IDENT" or tok.value not in _DECL_KEYS:
                self.fail(["'elements'", "'zero'", "'neg'", "'add'", "'mul'",
                           "'builder'", "'}'"])
            if tok.value in seen:
                _err(tok.line, tok.column, f"duplicate {tok.value!r} declaration")
            seen.add(tok.value)
            self.advance()
            if tok.value == "elements":
                self.expect(value=":", expected=["':'"])
                carrier = self.parse_carrier()
            elif tok.value == "zero":
                self.expect(value=":", expected=["':'"])
                zero = self.parse_atom()
            elif tok.value == "builder":
                self.expect(value=":", expected=["':'"])
                builder = self.parse_builderexpr()
            else:
                ops.append((tok.value, self.parse_opdef(tok.value)))
        self.expect(value="}", expected=["'}'"])
        return AlgebraSource(name=name, carrier=carrier, zero=zero,
                             ops=tuple(ops), builder=builder,
                             span=(head.line, head.column))

    def parse_carrier(self):
        tok = self.peek()
        if tok.kind == "INT":
            lo = int(self.advance().value)
            self.expect(value="..", expected=["'..'"])
            hi = int(self.expect(kind="INT", expected=["an integer"]).value)
            if hi < lo:
                _err(tok.line, tok.column, f"empty range {lo}..{hi}")
            return RangeCarrier(lo, hi)
        if tok.value == "[":
            self.advance()
            atoms = [self.parse_atom()]
            while self.at(","):
                self.advance()
                atoms.append(self.parse_atom())
            self.expect(value="]", expected=["']'"])
            return ListCarrier(tuple(atoms))
        self.fail(["an integer range", "'['"])

    def parse_atom(self):
        tok = self.peek()
        if tok.kind == "INT":
            return NumberAtom(Fraction(int(self.advance().value)))
        if tok.kind == "RATIONAL":
            num, den = self.advance().value.split("/")
            return NumberAtom(Fraction(int(num), int(den)))
        if tok.kind == "IDENT":
            return NameAtom(self.advance().value)
        self.fail(["a name", "a number"])

    def parse_opdef(self, opname):
        tok = self.peek()
        if tok.value == "(":
            self.advance()
            params = [self.expect(kind="IDENT", expected=["a variable"]).value]
            if self.at(","):
                self.advance()
                params.append(self.expect(kind="IDENT", expected=["a variable"]).value)
            self.expect(value=")", expected=["')'"])
            self.expect(value="=", expected=["'='"])
            body = self.parse_expr()
            want = 1 if opname == "neg" else 2
            if len(params) != want:
                _err(tok.line, tok.column,
                     f"{opname} takes {want} argument{'s' if want > 1 else ''}")
            return FormulaOp(tuple(params), body)
        if tok.value == ":":
            self.advance()
            return self.parse_tablelit()
        self.fail(["'('", "':'"])

    def parse_tablelit(self):
        open_tok = self.expect(value="[", expected=["'['"])
        if self.at("["):
            rows = [self.parse_table_row()]
            while self.at(","):
                self.advance()
                rows.append(self.parse_table_row())
            self.expect(value="]", expected=["']'"])
            return TableOp(tuple(rows), nested=True)
        atoms = [self.parse_atom()]
        while self.at(","):
            self.advance()
            atoms.append(self.parse_atom())
        self.expect(value="]", expected=["']'"])
        return TableOp(tuple(atoms), nested=False)

    def parse_table_row(self):
        self.expect(value="[", expected=["'['"])
        atoms = [self.parse_atom()]
        while self.at(","):
            self.advance()
            atoms.append(self.parse_atom())
        self.expect(value="]", expected=["']'"])
        return tuple(atoms)

    # expr := term (("+"|"-") term)*    term := factor ("*" factor)*
    def parse_expr(self):
        node = self.parse_term()
        while self.peek().value in ("+", "-"):
            op = self.advance().value
            node = BinOp(op, node, self.parse_term())
        return node

    def parse_term(self):
        node = self.parse_factor()
        while self.at("*"):
            self.advance()
            node = BinOp("*", node, self.parse_factor())
        return node

    def parse_factor(self):
        tok = self.peek()
        if tok.value == "(":
            self.advance()
            node = self.parse_expr()
            self.expect(value=")", expected=["')'"])
            return node
        if tok.kind == "IDENT" and tok.value in ("min", "max"):
            fn = self.advance().value
            self.expect(value="(", expected=["'('"])
            args = [self.parse_expr()]
            while self.at(","):
                self.advance()
                args.append(self.parse_expr())
            self.expect(value=")", expected=["')'"])
            if len(args) < 2:
                _err(tok.line, tok.column, f"{fn} needs at least two arguments")
            return MinMax(fn, tuple(args))
        if tok.kind == "IDENT":
            return Var(self.advance().value)
        if tok.kind == "INT":
            return Lit(Fraction(int(self.advance().value)))
        if tok.kind == "RATIONAL":
            num, den = self.advance().value.split("/")
            return Lit(Fraction(int(num), int(den)))
        self.fail(["a number", "a variable", "'('", "'min'", "'max'"])

    def parse_builderexpr(self):
        fn = self.expect(kind="IDENT", expected=["a builder name"]).value
        self.expect(value="(", expected=["'('"])
        args = [self.parse_builderarg()]
        while self.at(","):
            self.advance()
            args.append(self.parse_builderarg())
        self.expect(value=")", expected=["')'"])
        return BuilderExpr(fn, tuple(args))

    def parse_builderarg(self):
        tok = self.peek()
        if tok.kind == "INT":
            return int(self.advance().value)
        if tok.value == "[":
            self.advance()
            vals = [int(self.expect(kind="INT", expected=["an integer"]).value)]
            while self.at(","):
                self.advance()
                vals.append(int(self.expect(kind="INT", expected=["an integer"]).value))
            self.expect(value="]", expected=["']'"])
            return VectorArg(tuple(vals))
        if tok.kind == "IDENT":
            name = self.advance().value
            if self.at("("):
                self.pos -= 1
                return self.parse_builderexpr()
            return NameRef(name)
        self.fail(["an integer", "a vector", "an algebra name", "a builder call"])


def parse(text: str) -> list[AlgebraSource]:
    """Parse a source file into algebra definitions; syntax errors carry a
    line/column span and an expected-token message, and no partial
    structures are produced."""
    return _Parser(text).parse_file()


# -- pretty printer ---------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2}


def _expr_text(node, parent_prec=0, right=False):
    if isinstance(node, Lit):
        return str(node.value)
    if isinstance(node, Var):
        return node.name
    if isinstance(node, MinMax):
        return f"{node.fn}(" + ", ".join(_expr_text(a) for a in node.args) + ")"
    prec = _PREC[node.op]
    left = _expr_text(node.left, prec, right=False)
    rhs = _expr_text(node.right, prec, right=True)
    text = f"{left} {node.op} {rhs}"
    if prec < parent_prec or (right and prec == parent_prec):
        return f"({text})"
    return text


def _builder_text(node):
    parts = []
    for a in node.args:
        if isinstance(a, BuilderExpr):
            parts.append(_builder_text(a))
        elif isinstance(a, VectorArg):
            parts.append("[" + ", ".join(str(v) for v in a.values) + "]")
        elif isinstance(a, NameRef):
            parts.append(a.name)
        else:
            parts.append(str(a))
    return f"{node.fn}(" + ", ".join(parts) + ")"


def pretty(source: AlgebraSource) -> str:
    """Canonical text for a definition; parsing it reproduces the same tree."""
    lines = [f"algebra {source.name} {{"]
    if source.carrier is not None:
        if isinstance(source.carrier, RangeCarrier):
            lines.append(f"  elements: {source.carrier.lo}..{source.carrier.hi}")
        else:
            atoms = ", ".join(a.text() for a in source.carrier.atoms)
            lines.append(f"  elements: [{atoms}]")
    if source.zero is not None:
        lines.append(f"  zero: {source.zero.text()}")
    for opname, op in source.ops:
        if isinstance(op, FormulaOp):
            params = ", ".join(op.params)
            lines.append(f"  {opname}({params}) = {_expr_text(op.body)}")
        elif op.nested:
            rows = ", ".join("[" + ", ".join(a.text() for a in row) + "]"
                             for row in op.entries)
            lines.append(f"  {opname}: [{rows}]")
        else:
            lines.append(f"  {opname}: [" + ", ".join(a.text() for a in op.entries) + "]")
    if source.builder is not None:
        lines.append(f"  builder: {_builder_text(source.builder)}")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- elaboration --------------------------------------------------------------------

def _eval_expr(node, env):
    if isinstance(node, Lit):
        return node.value
    if isinstance(node, Var):
        if node.name not in env:
            raise KeyError(node.name)
        return env[node.name]
    if isinstance(node, MinMax):
        vals = [_eval_expr(a, env) for a in node.args]
        return min(vals) if node.fn == "min" else max(vals)
    a = _eval_expr(node.left, env)
    b = _eval_expr(node.right, env)
    if node.op == "+":
        return a + b
    if node.op == "-":
        return a - b
    return a * b


_BUILDER_ARITY = {
    "zn": "n", "luk": "n", "trivial": "algebra", "matrix": "algebra, n",
    "product": "algebras", "gamma": "k, unit vector", "sub": "algebra, elements",
}


def _run_builder(node, registry, span):
    def resolve(arg):
        if isinstance(arg, BuilderExpr):
            return _run_builder(arg, registry, span)
        if isinstance(arg, NameRef):
            if arg.name not in registry:
                _err(span[0], span[1], f"unknown algebra {arg.name!r}")
            return registry[arg.name]
        if isinstance(arg, VectorArg):
            return arg.values
        return arg

    args = [resolve(a) for a in node.args]

    def want(kinds):
        if len(args) != len(kinds) or not all(isinstance(a, k) for a, k in zip(args, kinds)):
            _err(span[0], span[1],
                 f"builder {node.fn} takes ({_BUILDER_ARITY[node.fn]})")

    if node.fn == "zn":
        want([int])
        return builders.build_zn(args[0])
    if node.fn == "luk":
        want([int])
        return builders.build_luk_mv(args[0])
    if node.fn == "trivial":
        want([FiniteMvwRig])
        return builders.lift_trivial_product(args[0])
    if node.fn == "matrix":
        want([FiniteMvwRig, int])
        rig, report = builders.build_matrix_rig(args[0], args[1])
        if not report.passed:
            raise AxiomViolation(report, context=rig.name)
        return rig
    if node.fn == "product":
        if len(args) < 2 or not all(isinstance(a, FiniteMvwRig) for a in args):
            _err(span[0], span[1], "builder product takes at least two algebras")
        return builders.direct_product(args)
    if node.fn == "gamma":
        want([int, tuple])
        return builders.gamma_zk(args[0], args[1])
    if node.fn == "sub":
        want([FiniteMvwRig, tuple])
        sub, _embedding = builders.subalgebra_closure(args[0], set(args[1]))
        return sub
    _err(span[0], span[1], f"unknown builder {node.fn!r}")


def elaborate(source: AlgebraSource, registry=None, check=True) -> FiniteMvwRig:
    """Turn a definition into a checked structure.

    Formula evaluation is exact; escapes from the carrier raise
    ClosureViolation with the witness inputs.  Unless ``check`` is off,
    the result must pass the MV axioms (and the product axioms when a
    product is defined).
    """
    registry = registry if registry is not None else {}
    line, col = source.span
    if source.builder is not None:
        if source.carrier or source.zero or source.ops:
            _err(line, col, "a builder algebra takes no other declarations")
        return _run_builder(source.builder, registry, source.span).set_name(source.name)

    if source.carrier is None:
        _err(line, col, "missing 'elements' declaration")
    if source.zero is None:
        _err(line, col, "missing 'zero' declaration")

    if isinstance(source.carrier, RangeCarrier):
        declared = [Fraction(v) for v in range(source.carrier.lo, source.carrier.hi + 1)]
        named = False
    else:
        atoms = source.carrier.atoms
        named = any(isinstance(a, NameAtom) for a in atoms)
        if named and not all(isinstance(a, NameAtom) for a in atoms):
            _err(line, col, "carrier mixes names and numbers")
        declared = [a.name if named else a.value for a in atoms]
        if len(set(declared)) != len(declared):
            _err(line, col, "carrier has duplicate elements")

    # element 0 is pinned to the zero: numeric carriers sort ascending with
    # the zero verified least, named ones move the zero to the front;
    # explicit tables are still read in the declared order
    if named:
        if not isinstance(source.zero, NameAtom) or source.zero.name not in declared:
            _err(line, col, "zero must be a carrier element")
        values = [source.zero.name] + [v for v in declared if v != source.zero.name]
    else:
        values = sorted(declared)
        if not isinstance(source.zero, NumberAtom) or source.zero.value not in values:
            _err(line, col, "zero must be a carrier element")
        if source.zero.value != values[0]:
            _err(line, col, "zero must be the least element of the carrier")

    index = {v: i for i, v in enumerate(values)}
    names = tuple(v if named else str(v) for v in values)
    size = len(values)

    def resolve_atom(atom, op, where):
        key = atom.name if isinstance(atom, NameAtom) else atom.value
        if key not in index:
            raise ClosureViolation(op, where, atom.text())
        return index[key]

    def table_for(opname, op, unary):
        if op is None:
            _err(line, col, f"missing {opname!r} definition")
        if isinstance(op, FormulaOp):
            if named:
                _err(line, col, "formulas need a numeric carrier")
            if unary:
                out = []
                for v in values:
                    res = _eval_expr(op.body, {op.params[0]: v})
                    if res not in index:
                        raise ClosureViolation(opname, (v,), res)
                    out.append(index[res])
                return out
            out = []
            for v in values:
                row = []
                for w in values:
                    res = _eval_expr(op.body, {op.params[0]: v, op.params[1]: w})
                    if res not in index:
                        raise ClosureViolation(opname, (v, w), res)
                    row.append(index[res])
                out.append(row)
            return out
        if unary:
            if op.nested or len(op.entries) != size:
                _err(line, col, f"{opname} table needs {size} entries")
            out = [0] * size
            for i, a in enumerate(op.entries):
                out[index[declared[i]]] = resolve_atom(a, opname, (declared[i],))
            return out
        if not op.nested or len(op.entries) != size or \
                any(len(row) != size for row in op.entries):
            _err(line, col, f"{opname} table needs {size}x{size} entries")
        out = [[0] * size for _ in range(size)]
        for i, row in enumerate(op.entries):
            for j, a in enumerate(row):
                out[index[declared[i]]][index[declared[j]]] = \
                    resolve_atom(a, opname, (declared[i], declared[j]))
        return out

    neg = table_for("neg", source.op("neg"), unary=True)
    add = table_for("add", source.op("add"), unary=False)
    mul_def = source.op("mul")
    mul = table_for("mul", mul_def, unary=False) if mul_def is not None else None

    rig = core.derive(neg, add, mul, names=names, name=source.name)
    if check:
        report = core.check_mv(rig)
        if not report.passed:
            raise AxiomViolation(report, context=source.name)
        if mul is not None:
            report = core.check_mvw(rig)
            if not report.passed:
                raise AxiomViolation(report, context=source.name)
    return rig


def elaborate_file(text: str, check=True):
    """Parse and elaborate every algebra in a source file, in order; later
    definitions may refer to earlier ones by name in builder calls."""
    registry = {}
    out = []
    for source in parse(text):
        rig = elaborate(source, registry=registry, check=check)
        registry[source.name] = rig
        out.append(rig)
    return out


# -- canonical JSON -------------------------------------------------------------------

def _dump(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def rig_document(rig: FiniteMvwRig) -> dict:
    return {
        "name": rig.name,
        "elements": list(rig.carrier.names),
        "zero": 0,
        "neg": rig.neg_table.tolist(),
        "add": rig.add_table.tolist(),
        "mul": None if rig.mul_table is None else rig.mul_table.tolist(),
        "flags": {
            "mv_only": rig.mv_only,
            "commutative": rig.commutative,
            "unit": rig.unit,
            "product_below_meet": rig.product_below_meet,
            "u": rig.u,
        },
    }


def serialize(obj) -> str:
    """Canonical JSON for structures, ideals, spectra, P-filters and frames;
    deterministic byte-for-byte."""
    if isinstance(obj, FiniteMvwRig):
        return _dump(rig_document(obj))
    if isinstance(obj, ideals.QuotientRig):
        return _dump(rig_document(obj.rig))
    if isinstance(obj, ideals.Ideal):
        return _dump(sorted(obj.members))
    if isinstance(obj, frames.PFilter):
        return _dump(sorted(obj.members))
    if isinstance(obj, spectrum.SpecSpace):
        return _dump(spectrum.export_json_doc(obj))
    if isinstance(obj, frames.FrameLA):
        return _dump(frames.export_json_doc(obj))
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _expect_key(doc, key, path):
    if key not in doc:
        raise SchemaError(path, f"missing key {key!r}")
    return doc[key]


def _int_matrix(data, size, path):
    if not isinstance(data, list) or len(data) != size:
        raise SchemaError(path, f"expected a list of {size} rows")
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != size:
            raise SchemaError(f"{path}[{i}]", f"expected {size} entries")
        for j, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < size:
                raise SchemaError(f"{path}[{i}][{j}]", "entry out of range")
    return data


def deserialize(text: str) -> FiniteMvwRig:
    """Rebuild a structure from its canonical JSON document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("$", "expected an object")
    name = _expect_key(doc, "name", "$.name")
    if not isinstance(name, str):
        raise SchemaError("$.name", "expected a string")
    elements = _expect_key(doc, "elements", "$.elements")
    if not isinstance(elements, list) or \
            not all(isinstance(e, str) for e in elements) or not elements:
        raise SchemaError("$.elements", "expected a nonempty list of strings")
    size = len(elements)
    if _expect_key(doc, "zero", "$.zero") != 0:
        raise SchemaError("$.zero", "the zero element is pinned to index 0")
    neg = _expect_key(doc, "neg", "$.neg")
    if not isinstance(neg, list) or len(neg) != size or \
            any(not isinstance(v, int) or not 0 <= v < size for v in neg):
        raise SchemaError("$.neg", f"expected {size} carrier indices")
    add = _int_matrix(_expect_key(doc, "add", "$.add"), size, "$.add")
    mul = _expect_key(doc, "mul", "$.mul")
    if mul is not None:
        mul = _int_matrix(mul, size, "$.mul")
    return core.derive(neg, add, mul, names=tuple(elements), name=name)
