"""Mantissa distributions, discrepancy mod 1 and Weyl-sum diagnostics for
sequences of powers of independent random variables."""

from .bounds import (
    RateParams,
    erdos_turan_bound,
    lemma_bound,
    optimal_H,
    partial_exponential_sum,
    prop_bound_form,
    theorem1_rhs,
    van_der_corput_bound,
    weyl_sum,
)
from .discrepancy import (
    DiscrepancyReport,
    SamplePoints,
    benford_discrepancy,
    extreme_discrepancy,
    extreme_discrepancy_oracle,
    star_discrepancy,
)
from .distributions import (
    CharFnQuery,
    DistributionSpec,
    char_fn,
    char_fn_oracle,
    check_prop2_hypotheses,
    check_prop3_hypotheses,
    continuous_uniform,
    discrete_uniform,
    exponential,
    frechet,
    geometric,
    powerlaw,
    powerlaw_normalizer,
    sample,
    sample_sequence,
)
from .errors import (
    BenfordLabError,
    ConfigError,
    ConvergenceError,
    DomainError,
    SizeGuardError,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .mantissa import (
    LOG10_DIGIT_PROBS,
    MantissaDecomposition,
    benford_measure,
    decompose,
    first_digit,
    log10_frac,
)
from .schedules import Schedule, parse_schedule
from .simulation import (
    ExperimentConfig,
    FrequencyTable,
    PowerRealization,
    TrajectoryReport,
    aggregate,
    cohen_cuny_statistic,
    digit_frequencies,
    discrepancy_trajectory,
    generate_powers,
    substream,
)

__version__ = "0.1.0"
