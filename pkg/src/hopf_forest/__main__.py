import sys

from hopf_forest.cli import main

sys.exit(main())
