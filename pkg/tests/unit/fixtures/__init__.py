"""Fixture package for unit tests.

This package contains various fixtures categorized by functionality.
"""
