import sys

from golay_hd.cli import main

sys.exit(main())
