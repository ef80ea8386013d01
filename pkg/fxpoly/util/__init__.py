# Run statistics
from ._logging import Logger, Log

# Errors
from ._errors import FxpolyError, DomainError, UsageError, ConfigError, \
    ExpressionSyntaxError, UnknownIdentifierError, ArityError, ConvergenceError, \
    ModelFitError, PricingError, NoFeasiblePlanError, SchemaError, TemplateError
