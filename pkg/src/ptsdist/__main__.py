import sys

from ptsdist.cli import main

sys.exit(main())
