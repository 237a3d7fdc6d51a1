"""
module barground.__main__

Default entrypoint when barground is invoked on the console by a user.
Calls the main() function in barground.entrypoint
"""

import sys

from .entrypoint import main

sys.exit(main())
