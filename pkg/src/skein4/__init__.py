"""Exact computations in the Kauffman bracket skein algebra of the 4-holed disk.

>>> from skein4 import normalize
>>> print(normalize("t23*t12"))
(Q^2 - Q^-6)*t13 + (1 - Q^-4)*t1*t3 + (1 - Q^-4)*t2*t123 + Q^-4*t12*t23
"""

from .laurent import ONE, ZERO, HalfLaurent, Q, alpha, q, qbar
from .skeinfree import GENERATORS, Generator, SkeinElement, gen, mirror, rotate
from .parse import ParseError, parse, parse_element
from .relations import RelationInstance, RewriteRule, RuleTable, build_rule_table, default_table
from .normalform import (
    BasisMonomial, NormalElement, Normalizer, as_free, enumerate_basis, mul_normal,
    normalize, rotate_normal, structure_constants,
)

__version__ = "0.1.0"
