"""fusionkit: exact arithmetic for fusion rings and modular data."""

__version__ = "0.1.0"
