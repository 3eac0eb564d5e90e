"""Causal discovery in binary exclusive-or skew acyclic models."""

from .diagnostics import SkewReport, skewness_report
from .discovery import (
    DiscoveryResult,
    TruthTableEstimate,
    discover,
    find_sink,
    find_truth_table,
    sorted_mutual_information,
)
from .estimator import BExSAM
from .evaluation import (
    BenchGrid,
    EvalReport,
    adjacency_from_estimate,
    evaluate,
    f_measure_adjacency,
    f_measure_truth_tables,
    run_benchmark,
    y_structure_confusion,
)
from .exceptions import BexsamError, DataError, ResourceLimitError
from .freqtable import FrequencyTable, build_frequency_table, exact_table, marginalize, selection_stats
from .generator import (
    Dataset,
    GenConfig,
    exact_distribution,
    random_model,
    sample_dataset,
    y_structure_model,
)
from .model import (
    BexsamModel,
    adjacency_of_model,
    eval_function,
    example_model,
    structural_equation,
    validate_model,
)

__version__ = "0.1.0"
