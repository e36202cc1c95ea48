import sys

from hamgrowth.cli import main

sys.exit(main())
