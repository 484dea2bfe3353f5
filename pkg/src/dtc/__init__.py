"""Complexes of directed trees: shellings, f/h-triangles, generating facets
and wedge-of-spheres homotopy types, checked against homology."""

__version__ = "0.1.0"
