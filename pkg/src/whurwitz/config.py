"""Size caps for the exact and brute-force routes.

The brute-force permutation cap can be overridden with the
``HURWITZ_CAP_N`` environment variable.
"""

import os

from .errors import CapExceeded

CHARACTER_CAP = 10
PATH_DEGREE_CAP = 5
_DEFAULT_BRUTE_FORCE_CAP = 6


def brute_force_cap():
    value = os.environ.get("HURWITZ_CAP_N")
    return int(value) if value else _DEFAULT_BRUTE_FORCE_CAP


def check_cap(name, value, cap):
    if value > cap:
        raise CapExceeded(f"{name}={value} exceeds cap {cap}")
