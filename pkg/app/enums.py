"""Set of enumerations shared by the whole lab : verdicts, stop reasons,
provenance of constants, elementary operations.

"""

from enum import StrEnum


class ElementaryOp(StrEnum):
    """Elementary operations supported by jets"""

    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"
    POW = "pow"
    SQRT = "sqrt"
    SIN = "sin"
    COS = "cos"
    TAN = "tan"
    EXP = "exp"
    LOG = "log"
    ARCCOS = "arccos"


class StopReason(StrEnum):
    """Reason why a trajectory stopped"""

    SPAN_END = "span_end"
    DOMAIN_GUARD = "domain_guard"
    MONOTONICITY_LOSS = "monotonicity_loss"
    RADICAND = "radicand"
    MAX_STEPS = "max_steps"


class Verdict(StrEnum):
    """Outcome of one metric of a verification report"""

    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not_applicable"
    # A displayed formula disagrees with its derivation, the derived form passed
    DIAGNOSTIC = "diagnostic"


class Provenance(StrEnum):
    """Where the parameters and constants of a case come from"""

    PRESET = "preset"
    CONFIG = "config"
    DERIVED = "derived-from-initial-state"


class FormVariant(StrEnum):
    """Which rendition of a formula is evaluated"""

    DISPLAYED = "displayed"
    DERIVED = "derived"


class ChainSource(StrEnum):
    """Solutions fed to a linearization chain"""

    # Integrated reduced equation, derivatives extended along the solution
    REDUCED = "reduced"
    # Hamiltonian flow, derivatives read off the jets of the Hamiltonian
    FLOW = "flow"
