"""Set of custom exceptions used in the lab"""


class LabError(Exception):
    """Generic lab exception"""

    message = "Lab Error"

    def __init__(self, message: str | None = None):
        super().__init__()
        if message is not None:
            self.message = message

    def __str__(self):
        return self.message


class JetOrderError(LabError):
    """Jet order out of range, or jets from different spaces combined"""

    message = "Jet Order Error"


class JetDomainError(LabError):
    """Elementary function evaluated outside of its domain"""

    message = "Jet Domain Error"

    def __init__(self, operation: str, value: float):
        super().__init__(f"{operation} is undefined at {value!r}")
        self.operation = operation
        self.value = value


class DomainGuardError(LabError):
    """State outside of the domain of a Hamiltonian system"""

    message = "Domain Guard Error"


class SingularLocusError(LabError):
    """Evaluation on the singular locus of an equation, transform or generator"""

    message = "Singular Locus Error"


class StepSizeUnderflowError(LabError):
    """Adaptive step size collapsed, usually near a singularity"""

    message = "Step Size Underflow"

    def __init__(self, location: float, step: float):
        super().__init__(
            f"Step size {step:.3e} underflowed at independent variable {location!r}"
        )
        self.location = location
        self.step = step


class MonotonicityLossError(LabError):
    """The coordinate chosen as new independent variable is not monotone"""

    message = "Monotonicity Loss"


class RadicandError(LabError):
    """Negative radicand inside a closure formula (turning point)"""

    message = "Radicand Error"

    def __init__(self, target: str, value: float):
        super().__init__(f"Negative radicand {value!r} in closure for {target}")
        self.target = target
        self.value = value


class ConditionViolatedError(LabError):
    """Linearizability condition required by a transform does not hold"""

    message = "Condition Violated"


class UnknownCaseError(LabError):
    """Requested case, variant or generator does not exist"""

    message = "Unknown Case"


class ConfigError(LabError):
    """Run configuration could not be read or validated"""

    message = "Config Error"


class IllConditionedError(LabError):
    """Least-squares regression points are not in general position"""

    message = "Ill Conditioned Regression"


class NoCyclicMomentumError(LabError):
    """The system has no plain cyclic momentum, a closure formula replaces it"""

    message = "No Cyclic Momentum"


class OutOfSpanError(LabError):
    """Dense output requested outside of the integrated span"""

    message = "Out Of Span"
