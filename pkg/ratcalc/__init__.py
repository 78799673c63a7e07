from ratcalc.rational import Rat, RationalParseError, format_rat, parse_rat, to_rat, to_sympy
from ratcalc.polynomial import (
    NonnegDecision,
    backward_difference,
    binom_poly,
    cauchy_bound,
    coefficients,
    evaluate,
    integer_nonneg_on_ray,
    integer_roots,
    poly,
    s,
    t,
)
from ratcalc.partitions import Partition, p_lambda, partitions_bounded
from ratcalc.positivity import LemmaPosError, lemma_pos_decompose
