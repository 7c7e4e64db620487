import sys

from trendsax.cli import main

sys.exit(main())
