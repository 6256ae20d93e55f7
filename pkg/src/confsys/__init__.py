"""Exact computational verification of conformally invariant operator systems
attached to Heisenberg parabolic subalgebras of simply-laced Lie algebras."""

__version__ = "0.1.0"
