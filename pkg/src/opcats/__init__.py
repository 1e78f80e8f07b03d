"""Finite categorical machinery with executable law checking.

Everything here lives at desk scale: based finite sets and their standard
subcategories, finite groups acting on everything, arity-truncated operads
and their categories of operators, monads and adjunctions evaluated on
finite probes, two-sided bar constructions, and integral homology via Smith
normal form.  Each algebraic law the library relies on is backed by an
exhaustive check over its finite domain.
"""

__version__ = "0.1.0"
