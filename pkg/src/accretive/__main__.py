import sys

from accretive.cli import main

sys.exit(main())
