import sys

from descartes_lab.cli import main

sys.exit(main())
