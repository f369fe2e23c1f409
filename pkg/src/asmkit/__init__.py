"""Exact enumeration of alternating sign matrices in symmetry classes,
classical group characters and determinant/Pfaffian identities."""

__version__ = "0.1.0"
