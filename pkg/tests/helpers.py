"""Shared code parameters for the test suite."""

from rankcodes.codes import make_code_spec

# the four parameter sets used for round trips (one per family)
ROUNDTRIP = {
    "sym": (2, 1, 7, 5),
    "alt": (2, 1, 9, 6),
    "herm-mixed": (2, 1, 6, 3),
    "herm-odd": (2, 1, 7, 5),
}

# small parameters in other characteristics / base fields
EXTRA = [
    ("sym", 3, 1, 5, 3),
    ("alt", 3, 1, 5, 4),
    ("herm-mixed", 3, 1, 4, 3),
    ("herm-odd", 3, 1, 3, 3),
    ("sym", 2, 2, 4, 2),
    ("herm-odd", 2, 2, 3, 1),
]


def roundtrip_specs():
    return {fam: make_code_spec(fam, *params) for fam, params in ROUNDTRIP.items()}


def extra_specs():
    return [make_code_spec(fam, *params) for fam, *params in EXTRA]
