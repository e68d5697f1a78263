"""Edge zeta functions of spherical buildings.

Submodules: ``weyl`` (root systems), ``typeorbits`` (next-type orbits),
``luo`` (half-period m), ``symfunc`` (partition combinatorics), ``zeta``
(closed forms for types A and C), ``oracle`` (finite-field buildings) and
``cli``.
"""

__version__ = "0.1.0"
