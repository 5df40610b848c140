"""Exact symbolic engine for the 2+1-dimensional deformed Poincare group,
its dual algebra, and the eight-dimensional bicovariant differential calculus,
with a verification suite that re-derives and checks every structural identity.
"""

__version__ = "0.1.0"
