"""Arithmetic progressions in sumsets of two geometric progressions.

Tooling for the sets S_{a,b} = {a^x + b^y : x, y >= 0} with b > a > 1:
membership and enumeration, exhaustive bounded progression search, complete
solvers for the related two-prime exponential equations, the classification
table for 5-term progressions with verification sweeps, constructive
infinite families, and a registry of named finite computations with
recorded expected outputs.
"""

__version__ = "0.1.0"

from .apsearch import ApSearchReport, Progression, count_3term_stable, extend, find_progressions
from .catalog import LemmaSolution, lemma21_classify, lemma21_solve, run_all, run_check
from .classify import (
    ClassEntry,
    SweepConfig,
    family_nonextension,
    theorem1_match,
    verify_corollary,
    verify_theorem1,
)
from .families import FamilySpec, family_params, find_prog3_pairs, generate, verify
from .numutil import PrimeSet, ord_p, power_exponent, smooth_enumerate
from .sumset import Representation, SumsetElement, SumsetParams, contains, enumerate_up_to, representations
from .sunit import (
    Pattern,
    PatternSolution,
    PatternTerm,
    SearchBudgetExceeded,
    TripleSolution,
    bajpai_bennett_5term,
    deweger_3term,
    deze_tijdeman_4term,
    solve_pattern,
)
