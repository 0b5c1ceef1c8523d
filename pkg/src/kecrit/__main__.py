from kecrit.cli import main
import sys

sys.exit(main())
