import sys

from fxpoly.cli import main

sys.exit(main())
