"""
bracoid-lab
===========
Finite skew left, right and two-sided bracoids, skew braces, exhaustive
identity checking and small-order enumeration.
"""

__version__ = "0.1.0"
