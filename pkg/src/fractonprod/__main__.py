import sys

from fractonprod.cli import main

sys.exit(main())
