"""
Membership dispatch over the three cones.
"""

from cones.base import Certificate, Check, ConeId, ConeKind, certify
from cones.hilbert_cone import create_q_check
from cones.positive import create_p_check
from cones.regularity import create_r_check, create_r_dim_check, create_r_pd_check
from series.genfun import AmbientSpaceError, GenFun


def create_check(cone: ConeId) -> Check:
    if cone.kind is ConeKind.P:
        return create_p_check(cone.n, cone.bound)
    if cone.kind is ConeKind.Q:
        return create_q_check(cone.n, cone.bound)
    return create_r_check(cone.n, cone.bound)


def membership(cone: ConeId, g: GenFun) -> Certificate:
    """
    Raises:
        AmbientSpaceError: g is not in V_{n,a} (P, Q) or V_{n+1,m} (R)
    """
    ambient = cone.n + 1 if cone.kind is ConeKind.R else cone.n
    if not g.in_space(ambient, cone.bound):
        raise AmbientSpaceError(f"not in ambient space V_{{{ambient},{cone.bound}}} of {cone}: {g}")
    return certify(create_check(cone), g)


def r_membership_dim_restricted(g: GenFun, n: int, m: int, d: int) -> Certificate:
    """Membership in R_{n,m} plus D^i q(m) = 0 for d <= i <= n."""
    if not g.in_space(n + 1, m):
        raise AmbientSpaceError(f"not in ambient space V_{{{n + 1},{m}}}: {g}")
    return certify(create_r_dim_check(n, m, d), g)


def r_membership_pd_restricted(g: GenFun, n: int, m: int, ell: int) -> Certificate:
    """Membership in the subcone of R_{n,m} of modules with projective dimension at most ell."""
    if not g.in_space(n + 1, m):
        raise AmbientSpaceError(f"not in ambient space V_{{{n + 1},{m}}}: {g}")
    return certify(create_r_pd_check(n, m, ell), g)
