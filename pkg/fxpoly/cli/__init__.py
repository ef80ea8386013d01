# Command line entry point
from ._main import main, EXIT_OK, EXIT_ERROR, EXIT_NO_PLAN, EXIT_VERIFY_FAILED
