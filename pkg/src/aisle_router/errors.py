"""Exception hierarchy shared by the solver modules."""


class AisleRouterError(Exception):
    pass


class InvalidInstanceError(AisleRouterError, ValueError):
    pass


class InvalidEdgeError(AisleRouterError, ValueError):
    pass


class InvalidRestrictionError(AisleRouterError, ValueError):
    """A subgraph handed to ``pts_class`` uses edges outside the requested side."""


class ContractError(AisleRouterError, ValueError):
    """A documented precondition of an operation does not hold."""


class UnsupportedInstanceError(AisleRouterError, ValueError):
    """The operation is only defined for rectangular warehouses."""


class InfeasibleError(AisleRouterError):
    pass


class InstanceTooLargeError(AisleRouterError, ValueError):
    pass


class CounterexampleNotFound(AisleRouterError):
    pass


class FormatError(AisleRouterError, ValueError):
    """Malformed instance or tour file."""
