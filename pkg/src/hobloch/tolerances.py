"""Central numeric tolerances.

All comparisons in the package default to these values; override a module
attribute here (or pass an explicit ``atol`` where a function accepts one)
to tighten or relax them globally.
"""

# Absolute tolerance for algebraic identities (normalization, unitarity,
# orthogonality, round trips).
DEFAULT_ATOL = 1e-12

# |v| = 1 check on user-supplied direction vectors (field axes, Stokes input).
UNIT_ATOL = 1e-9

# |alpha|^2 + |beta|^2 = 1 check on user-supplied coefficient pairs.
COEFF_ATOL = 1e-9

# A ring with radius below this is treated as a single point.
DEGENERATE_RADIUS = 1e-9

# Polarization with |s3| below this counts as linear.
LINEAR_S3_ATOL = 1e-9

# The unwrapped winding of a sampled ring must be this close to an integer.
WINDING_INT_ATOL = 1e-6

# Fixed-step integrator refuses steps with |omega| * dt above this.
MAX_OMEGA_DT = 0.5
