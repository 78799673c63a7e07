from cones.base import (
    Certificate,
    Check,
    ConeId,
    ConeKind,
    Violation,
    certify,
    composite_and,
)
from cones.labels import (
    Cyclic,
    LambdaFamily,
    MuFamily,
    PurePower,
    RayLabel,
    RayLabelError,
    a_hat,
    check_p_label,
    label_to_dict,
    lambda_max_parts,
    mu_max_parts,
    parse_label,
)
from cones.positive import create_p_check, enumerate_p_rays, p_ray, ray_polynomial
from cones.hilbert_cone import (
    CrossSectionError,
    CrossSectionPoint,
    create_q_check,
    cross_section_frame,
    enumerate_q_rays,
    q31_cross_section,
    q_extreme_ray,
    q_halfspace_values,
    q_series_from_coordinates,
    thm_one_coefficients,
    verify_cross_section_point,
)
from cones.regularity import (
    SubspaceError,
    create_r_check,
    create_r_pd_check,
    dimension_restricted_rays,
    pd_restricted_rays,
    r_compose,
    r_decompose,
    r_extreme_rays,
    r_facet_values,
    r_ray_labels,
)
from cones.membership import (
    create_check,
    membership,
    r_membership_dim_restricted,
    r_membership_pd_restricted,
)
