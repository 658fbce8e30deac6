"""
Shared plumbing: settings, logging, errors.
"""
