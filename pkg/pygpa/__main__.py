import sys

from pygpa.cli import main

sys.exit(main())
