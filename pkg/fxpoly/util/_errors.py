# Exception hierarchy shared by every fxpoly sub-package


class FxpolyError(Exception):
    pass


class DomainError(FxpolyError):
    def __init__(self, message, x=None):
        super().__init__(message)
        self.x = x


class UsageError(FxpolyError):
    pass


class ConfigError(FxpolyError):
    pass


class ExpressionSyntaxError(FxpolyError):
    def __init__(self, message, position):
        super().__init__(f'{message} at offset {position}')
        self.position = position


class UnknownIdentifierError(FxpolyError):
    def __init__(self, name, position=None):
        super().__init__(f'unknown identifier "{name}"')
        self.name = name
        self.position = position


class ArityError(FxpolyError):
    def __init__(self, name, expected, got):
        super().__init__(f'{name} takes {expected} argument(s), got {got}')
        self.name = name
        self.expected = expected
        self.got = got


class ConvergenceError(FxpolyError):
    pass


class ModelFitError(FxpolyError):
    pass


class PricingError(FxpolyError):
    def __init__(self, op):
        super().__init__(f'no unit cost for operation "{op}"')
        self.op = op


class NoFeasiblePlanError(FxpolyError):
    def __init__(self, reasons=None):
        self.reasons = dict(reasons or {})
        detail = ', '.join(f'k={k}: {r}' for k, r in sorted(self.reasons.items()))
        super().__init__('no feasible plan' + (f' ({detail})' if detail else ''))


class SchemaError(FxpolyError):
    def __init__(self, field, message=None):
        super().__init__(f'{field}: {message or "missing or invalid"}')
        self.field = field


class TemplateError(FxpolyError):
    def __init__(self, placeholder, message=None):
        super().__init__(message or f'unbound placeholder "{placeholder}"')
        self.placeholder = placeholder
