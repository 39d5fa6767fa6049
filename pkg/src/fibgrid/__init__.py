"""Exact generalized Fibonacci sequences and their diagonal-ratio property.

Fill a (2n+1) x (2n+1) grid row by row with consecutive terms of any
sequence G(k) = G(k-1) + G(k-2).  The sum along the main diagonal divided
by the sum along the anti-diagonal is a rational constant c(n) that does
not depend on the starting values.  This package computes c(n) exactly,
certifies it by independent routes, and checks a catalog of classical
Fibonacci/Lucas identities.

All arithmetic is exact (Python integers, :class:`fractions.Fraction` and
:class:`fibgrid.qfield.QuadNum` for Q(sqrt 5)).
"""

from .errors import ClosedFormError, IndexCapError, InvariantViolation, VerificationError
from .grid import (
    DfDlPair,
    GridSpec,
    RatioResult,
    anti_diag_form,
    d_f,
    d_l,
    main_diag_form,
    prefactor,
    ratio_c,
    ratio_general,
    render_grid,
    verify_cross_identity,
    verify_theorem2,
)
from .qfield import PHI, PSI, SQRT5, QuadNum, binet_fib, binet_lucas
from .seqcore import (
    FIBONACCI,
    LUCAS,
    Decomposition,
    LinearForm,
    SeedPair,
    decompose,
    fib,
    gen_linear_form,
    gen_term,
    lucas,
)
from .sums import SumQuery, equidistant_sum_closed, equidistant_sum_direct

__version__ = "0.1.0"

__all__ = [
    "ClosedFormError", "IndexCapError", "InvariantViolation", "VerificationError",
    "DfDlPair", "GridSpec", "RatioResult", "anti_diag_form", "d_f", "d_l",
    "main_diag_form", "prefactor", "ratio_c", "ratio_general", "render_grid",
    "verify_cross_identity", "verify_theorem2",
    "PHI", "PSI", "SQRT5", "QuadNum", "binet_fib", "binet_lucas",
    "FIBONACCI", "LUCAS", "Decomposition", "LinearForm", "SeedPair", "decompose",
    "fib", "gen_linear_form", "gen_term", "lucas",
    "SumQuery", "equidistant_sum_closed", "equidistant_sum_direct",
]
