import sys

from k0rep.cli import main

sys.exit(main())
