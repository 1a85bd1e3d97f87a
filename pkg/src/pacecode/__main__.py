import sys

from pacecode.cli import main

sys.exit(main())
