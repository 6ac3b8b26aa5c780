"""Exact counts of m x n circled-letter arrays under D2 symmetry."""

__version__ = "0.1.0"

from wordrep.counting.egf_counts import (  # noqa: E402
    count_c,
    count_h,
    count_p,
    count_r,
    count_report,
    count_s,
    count_v,
    count_w,
)
from wordrep.counting.models import CountReport, GridShape, shape  # noqa: E402
