"""
Rank toolkit for quaternion unit gain graphs.
"""
__version__ = "0.1.0"
