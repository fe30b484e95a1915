import sys

from controlbound.harness.cli import main

sys.exit(main())
