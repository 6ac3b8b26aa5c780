#!/usr/bin/env python3

"""
config.py

Configuration module for the circled-letter array counting engine.

This file defines the limits, audited constants and output settings used
across the package:

1. Enumeration limits:
   - ORACLE_MAX_CELLS     : largest grid (in cells) the brute-force oracle will enumerate
   - NAIVE_MAX_CELLS      : largest grid for the naive circle-enumeration path

2. Sweep bounds used by `wordrep verify`:
   - CLOSED_SUM_MAX_CELLS       : shapes checked against the closed summations
   - ROTATION_SUM_MAX_HALF      : largest half-size N for the rotation summation
   - IDENTITY_MAX_CELLS         : N bound for the p_count identities
   - INTEGRALITY_MAX_CELLS      : Burnside integrality sweep
   - ORBIT_TYPE_AUDIT_MAX_CELLS : orbit-type audit sweep
   - PROPERTY_MAX_CELLS         : transpose, sandwich and degenerate-row identities

3. Audited normalisation constants:
   - ROTATION_CENTER_FACTOR      : K, scales the odd x odd rotation generating function
   - FULL_SYMMETRY_CENTER_FACTOR : K', scales the odd x odd full-symmetry generating function

4. CLI defaults, data and logging:
   - TABLE_MAX_CELLS, VERIFY_MAX_CELLS
   - REFERENCE_COUNTS_FILE : golden counts shipped with the package
   - REFERENCE_ERRATA_FILE : published values that the golden counts correct
   - LOG_FORMAT

Environment Variables:
- WORDREP_ORACLE_MAX_CELLS : Optional override for ORACLE_MAX_CELLS
"""

import os

# Enumeration limits
ORACLE_MAX_CELLS = int(os.getenv("WORDREP_ORACLE_MAX_CELLS", "10"))
NAIVE_MAX_CELLS = 8

# Verification sweeps
CLOSED_SUM_MAX_CELLS = 16
ROTATION_SUM_MAX_HALF = 10
IDENTITY_MAX_CELLS = 12
INTEGRALITY_MAX_CELLS = 30
ORBIT_TYPE_AUDIT_MAX_CELLS = 20
PROPERTY_MAX_CELLS = 20

# Normalisation constants; `wordrep verify` re-derives both before trusting them
ROTATION_CENTER_FACTOR = 2
FULL_SYMMETRY_CENTER_FACTOR = 2

# CLI defaults
TABLE_MAX_CELLS = 15
VERIFY_MAX_CELLS = 10

# Reference data
BASE_DIR = os.path.dirname(os.path.abspath(__file__))
REFERENCE_COUNTS_FILE = os.path.join(BASE_DIR, "data", "reference_counts.csv")
REFERENCE_ERRATA_FILE = os.path.join(BASE_DIR, "data", "reference_errata.csv")

LOG_FORMAT = "[%(levelname)s] %(message)s"
