"""McShane-type identities on hyperbolic cone-tori, checked numerically."""
from .errors import (DegenerateStructureError, DomainError, InvalidCombinationError,
                     InvalidStructureError, McShaneError, PoleError, RangeError,
                     SeedMismatchError, SingularConfigurationError)
from .gapcat import BoundarySpec, EndDescriptor, gap, gap_prime, gap_via_gs
from .kernel import (g_func, length_from_trace, mirzakhani_d, mirzakhani_r,
                     principal_atanh, principal_log, s_func)
from .markoff import (GeodesicRecord, Slope, TraceTriple, boundary_invariant,
                      enumerate_geodesics, symmetric_seed, vieta_flip, weierstrass_class)
from .pants import FootLayout, PantsSpec, foot_widths, partition_widths, perpendicular_lengths
from .verify import (VerificationReport, tail_estimate, verify_combined,
                     verify_full_identity, verify_weierstrass)

__version__ = "0.1.0"
