from series.genfun import AmbientSpaceError, GenFun
from series.ops import (
    apply_T,
    coeff_at,
    coefficients_upto,
    eigen_coordinates,
    from_eigen_coordinates,
    hilbert_polynomial,
    invert_T,
    poly_tail_to_genfun,
)
from series.coordinates import RCoordinates, r_coordinates, rcoords_to_genfun
