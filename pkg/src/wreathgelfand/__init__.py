"""Gelfand-pair tests for wreath products with the diagonal subgroup."""

from .asymptotics import bound_table, first_crossover, inequality_check, r_ratio
from .chartable import (
    CharacterTable,
    NumericalIntegralityError,
    TableParseError,
    TableValidationError,
    cyclic_table,
    dihedral_table,
    load_table,
    symmetric_table,
    validate,
)
from .crack import CrackReport, GelfandReport, cracking_point, dimension_audit, is_gelfand
from .partitions import SizeLimitError, enumerate_partitions, hook_dimension, max_dimension
from .wreath import PiMultiset, decompose_m_pi, kron_multiplicity, m_pi

__all__ = [
    "CharacterTable", "CrackReport", "GelfandReport", "NumericalIntegralityError", "PiMultiset",
    "SizeLimitError", "TableParseError", "TableValidationError", "bound_table", "cracking_point",
    "cyclic_table", "decompose_m_pi", "dihedral_table", "dimension_audit", "enumerate_partitions",
    "first_crossover", "hook_dimension", "inequality_check", "is_gelfand", "kron_multiplicity",
    "load_table", "m_pi", "max_dimension", "r_ratio", "symmetric_table", "validate",
]
