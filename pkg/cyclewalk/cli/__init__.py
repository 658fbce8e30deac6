"""
CLI package for cyclewalk.
"""
