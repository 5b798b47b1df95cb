from skewlines.classify.counting import (
    FINAL_TABLE,
    TableRow,
    exponent_pairs,
    line_count_bound,
    n_m_bruteforce,
    n_m_formula,
    prime_class_count,
    self_paired_root_count,
    table_row,
)
from skewlines.classify.partition import (
    ClassPartition,
    ParamPair,
    admissible_pairs,
    chi_set,
    class_partition,
    distinct_tl_check,
    four_lines,
    param_pair_from_roots,
)
from skewlines.classify.union_find import UnionFind

__all__ = [
    "FINAL_TABLE",
    "ClassPartition",
    "ParamPair",
    "TableRow",
    "UnionFind",
    "admissible_pairs",
    "chi_set",
    "class_partition",
    "distinct_tl_check",
    "exponent_pairs",
    "four_lines",
    "line_count_bound",
    "n_m_bruteforce",
    "n_m_formula",
    "param_pair_from_roots",
    "prime_class_count",
    "self_paired_root_count",
    "table_row",
]
