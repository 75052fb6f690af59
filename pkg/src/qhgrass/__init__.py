"""Exact quantum cohomology, Betti screens and chi_y genera for complex
Grassmannians and their smooth hyperplane sections."""

__version__ = "0.1.0"
