import sys

from ksink.cli import main

sys.exit(main())
