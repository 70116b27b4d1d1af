"""Exception types shared across the package."""


class MvwError(Exception):
    """Base class for all workbench errors."""


class OrderNotAntisymmetric(MvwError):
    """The truncated-difference order of the input tables is not antisymmetric.

    The offending pair is available as ``.witness``; the input cannot be an
    MV-algebra and no derived structure is produced.
    """

    def __init__(self, x, y):
        self.witness = (x, y)
        super().__init__(f"order not antisymmetric: elements {x} and {y} are mutually <=")


class ClosureViolation(MvwError):
    """An operation left the carrier. ``.inputs`` and ``.value`` hold the witness."""

    def __init__(self, op, inputs, value):
        self.op = op
        self.inputs = inputs
        self.value = value
        args = ", ".join(str(a) for a in inputs)
        super().__init__(f"{op}({args}) = {value} is not in the carrier")


class AxiomViolation(MvwError):
    """A constructed structure failed the axiom checker; ``.report`` has witnesses."""

    def __init__(self, report, context=""):
        self.report = report
        failed = ", ".join(sorted(report.failed_axioms()))
        prefix = f"{context}: " if context else ""
        super().__init__(f"{prefix}axioms failed: {failed}")


class SizeBound(MvwError):
    """A construction or enumeration would exceed the configured carrier bound."""


class NotCommutative(MvwError):
    """Operation requires a commutative product."""


class InvalidUnit(MvwError):
    """Unit vector for the interval construction must have 0/1 entries."""


class Trivial(MvwError):
    """Operation requires a structure with more than one element."""


class NotACongruence(MvwError):
    """A supplied partition fails a congruence clause; ``.witness`` explains."""

    def __init__(self, clause, witness):
        self.clause = clause
        self.witness = witness
        super().__init__(f"not a congruence ({clause}): witness {witness}")


class NotAHomomorphism(MvwError):
    """A supplied map fails a homomorphism clause; ``.witness`` explains."""

    def __init__(self, clause, witness):
        self.clause = clause
        self.witness = witness
        super().__init__(f"not a homomorphism ({clause}): witness {witness}")


class EmptySeed(MvwError):
    """P-filters are nonempty; generation from the empty set is undefined."""


class NotACover(MvwError):
    """The principal P-filters of the given generators do not join to the whole rig."""


class GateNotMet(MvwError):
    """A theorem's hypothesis (commutativity, unit, product) does not hold."""


class SchemaError(MvwError):
    """A JSON document does not match the expected schema; ``.path`` locates it."""

    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}")


class DslSyntaxError(MvwError):
    """Source text failed to parse or validate; ``.diagnostic`` has the span."""

    def __init__(self, diagnostic):
        self.diagnostic = diagnostic
        super().__init__(str(diagnostic))
