import sys

from pinn_bench.benchcli import main

sys.exit(main())
