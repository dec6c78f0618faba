import sys

from semiinf.cli import main

sys.exit(main())
