"""Distance-based colorings of bounded-degree plane graphs."""

__version__ = "0.1.0"
