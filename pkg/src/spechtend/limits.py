"""Default resource budgets for materialization and enumeration."""

DEFAULT_MAX_BITS = 2**31
DEFAULT_MAX_TABLES = 200_000
