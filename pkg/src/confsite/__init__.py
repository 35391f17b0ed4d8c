"""confsite: static-site generator for virtual academic conferences."""

__version__ = "0.1.0"
