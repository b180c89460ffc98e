"""Finite models of monads, Eilenberg-Moore objects, oidal monads and the
double functor from monads to squares."""

__version__ = "0.1.0"
