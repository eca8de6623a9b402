"""Finite solvable groups, p-subgroup complexes, exact integral
homology, and mechanical verification of structural predictions."""

from .errors import QuillenError
from .group import (
    DEFAULT_ELEMENT_CAP,
    Group,
    Subgroup,
    group_from_generators,
    group_from_table,
)
from .constructions import GroupSpec, build, catalog, catalog_group, catalog_names
from .poset import (
    SimplicialComplex,
    SubgroupPoset,
    WedgeAssembly,
    ab_poset,
    brown_poset,
    find_conjunctive_element,
    join,
    link,
    order_complex,
    quillen_poset,
    upper_interval,
    wedge,
)
from .homology import (
    HomologyProfile,
    SphericityVerdict,
    is_cohen_macaulay,
    reduced_homology,
    smith_normal_form,
    sphericity,
)
from .theorems import (
    StructureReport,
    TheoremVerdict,
    classify_odd_p_group,
    decompose_2group,
    main_theorem_check,
    p_length_bound_check,
    upper_interval_check,
    verify_pulkus_welker,
)
from .report import AnalysisReport, group_stats

__version__ = "1.0.0"

__all__ = [
    "AnalysisReport",
    "DEFAULT_ELEMENT_CAP",
    "Group",
    "GroupSpec",
    "HomologyProfile",
    "QuillenError",
    "SimplicialComplex",
    "SphericityVerdict",
    "StructureReport",
    "Subgroup",
    "SubgroupPoset",
    "TheoremVerdict",
    "WedgeAssembly",
    "ab_poset",
    "brown_poset",
    "build",
    "catalog",
    "catalog_group",
    "catalog_names",
    "classify_odd_p_group",
    "decompose_2group",
    "find_conjunctive_element",
    "group_from_generators",
    "group_from_table",
    "group_stats",
    "is_cohen_macaulay",
    "join",
    "link",
    "main_theorem_check",
    "order_complex",
    "p_length_bound_check",
    "quillen_poset",
    "reduced_homology",
    "smith_normal_form",
    "sphericity",
    "upper_interval",
    "upper_interval_check",
    "verify_pulkus_welker",
    "wedge",
]
