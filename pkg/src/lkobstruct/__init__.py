"""Exact algebra for slice-disk obstructions of the square knot.

Submodules: ``algebra`` (Laurent polynomials, the field Q[t]/(t^2-t+1),
torsion values), ``words`` (free groups and Z_p * Z_q), ``slopes``
(pillowcase slope words), ``obstruction`` (triviality in the torus-knot
quotient), ``alexander`` (Alexander module and Blanchfield pairing),
``verify`` and ``cli``.
"""

__version__ = "0.1.0"
