import sys

from domishold.cli import main

sys.exit(main())
