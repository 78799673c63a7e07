from realize.construction import (
    RaySplit,
    Realization,
    RealizationError,
    clear_denominators,
    minimal_integral_multiple,
    realize_p_ray,
    split_ray,
    verify_realization,
)
