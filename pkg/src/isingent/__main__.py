import sys

from isingent.experiments.cli import main

sys.exit(main())
