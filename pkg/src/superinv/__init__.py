"""Exact multiplicities and Poincare series for gl(k|l) tensor invariants.

The main entry points are re-exported here; see the submodules for the
full toolkit.
"""

from .characters import CharStore, kronecker, m_oracle, mbar_oracle, murnaghan_nakayama
from .laurent import LaurentPoly, constant_term, exact_div
from .multiplicity import m_ct, m_large, m_prime, mbar_large, mbar_prime
from .partitions import Partition, enumerate_hook, is_large, is_typical, parse_partition
from .series import (SERIES, P_oracle_series, Pbar_oracle_series, Pbarprime_series,
                     Pprime_series, RationalForm, T_series, Tbar_series,
                     functional_equation_check, rational_expand)
from .symfunc import Alphabet, hook_schur_eval, schur_eval

__version__ = "0.1.0"
