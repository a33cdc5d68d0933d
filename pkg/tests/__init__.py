"""Test modules for fbplab."""

__all__ = []
