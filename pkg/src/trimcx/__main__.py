"""python -m trimcx"""

import sys

from trimcx.cli import main

sys.exit(main())
