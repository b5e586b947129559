import sys

from compalg_kit.cli.app import main

sys.exit(main())
