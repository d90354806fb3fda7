import sys

from conecurves.cli import main

sys.exit(main())
