"""
Test package for qgain
"""
