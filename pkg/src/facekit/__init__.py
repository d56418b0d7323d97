"""facekit: exact tools for faces and relative-interior notions of convex sets.

Subpackages:
  ratcore   exact rational vectors, cones, LP feasibility
  polyface  rational V-polytopes, minimal faces, interior classification
  seqmodels symbolic sequence-space points and curated model sets
  proplab   property-based testing harness over random polytopes
  cli       command-line front end
"""

__version__ = "0.1.0"

from .ratcore import kernel_backend

__all__ = ["kernel_backend", "__version__"]
