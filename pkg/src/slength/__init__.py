"""Stanley length of monomial ideals and their quotients."""
from .decomposition import (StanleyDecomposition, StanleySpace, VerifyResult, measure,
                            space, squarefree_normalize, verify)
from .errors import (AmbientDimensionError, DomainError, SizeBudgetExceeded,
                     SlengthError, TrivialQuotient)
from .monomials import (IdealStats, MonomialIdeal, QuotientModule, colon, contains,
                        ideal, ideal_sum, intersect, minimal_primes, minimalize,
                        radical, stats, symbolic_power)
from .solver import (SlengthReport, constrained_min_length, exact_slength_squarefree,
                     sdepth_squarefree, slength_report)

__version__ = "0.1.0"

__all__ = [
    "StanleyDecomposition", "StanleySpace", "VerifyResult", "measure", "space",
    "squarefree_normalize", "verify",
    "AmbientDimensionError", "DomainError", "SizeBudgetExceeded", "SlengthError",
    "TrivialQuotient",
    "IdealStats", "MonomialIdeal", "QuotientModule", "colon", "contains", "ideal",
    "ideal_sum", "intersect", "minimal_primes", "minimalize", "radical", "stats",
    "symbolic_power",
    "SlengthReport", "constrained_min_length", "exact_slength_squarefree",
    "sdepth_squarefree", "slength_report",
]
