"""Exception hierarchy shared by every gxclean module."""


class GxCleanError(Exception):
    """Base class for all domain errors raised by gxclean."""


class SizeCapExceeded(GxCleanError):
    def __init__(self, order, cap):
        super().__init__(f"ring of order {order} exceeds size cap {cap}")
        self.order = order
        self.cap = cap


class NotIdempotent(GxCleanError):
    pass


class InvalidConstruction(GxCleanError):
    pass


class AxiomFailure(GxCleanError):
    pass


class NonCentralCoefficient(GxCleanError):
    def __init__(self, index, element):
        super().__init__(f"coefficient {index} (element {element}) is not central")
        self.index = index
        self.element = element


class NonCentralParameter(GxCleanError):
    pass


class NotSurjective(GxCleanError):
    pass


class NotAUnit(GxCleanError):
    pass


class InvalidInputWitness(GxCleanError):
    pass


class PreconditionFailed(GxCleanError):
    pass


class ZeroPolynomial(GxCleanError):
    pass


class UnknownTheorem(GxCleanError):
    pass


class ParseError(GxCleanError):
    def __init__(self, message, position=None):
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")
        self.position = position
