"""
Unit tests for chebroot, the quintic real-root classifier
"""

