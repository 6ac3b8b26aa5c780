#!/usr/bin/env python3

"""
data_loader.py

Load the published reference counts shipped with the package.

The file `wordrep/data/reference_counts.csv` holds the golden rows (the six
rows of the published numerical table and the worked 3x1 example) with
columns m,n,P,H,V,R,S,W. A blank cell means the value was not published.

Where a published value is wrong, the golden row carries the corrected value and
`wordrep/data/reference_errata.csv` (m,n,quantity,published,corrected) keeps the
value as printed. `wordrep verify` re-derives every correction.

Configuration:
- Uses `wordrep.config.REFERENCE_COUNTS_FILE` and `REFERENCE_ERRATA_FILE`.

Dependencies:
- pandas
- wordrep.config
"""

from __future__ import annotations

import logging
from typing import Dict, List, NamedTuple, Optional, Tuple

import pandas as pd

from wordrep import config

logger = logging.getLogger(__name__)

ReferenceCounts = Dict[Tuple[int, int], Dict[str, int]]
REFERENCE_COLUMNS = ("P", "H", "V", "R", "S", "W")
ERRATA_COLUMNS = ("m", "n", "quantity", "published", "corrected")


class Erratum(NamedTuple):
    m: int
    n: int
    quantity: str
    published: int
    corrected: int


def _read(path: str, columns) -> pd.DataFrame:
    # Read as strings: counts exceed 64 bits and blanks must stay blank.
    frame = pd.read_csv(path, dtype=str, keep_default_na=False)
    missing = [c for c in columns if c not in frame.columns]
    if missing:
        raise ValueError(f"{path} is missing columns {missing}")
    return frame


def load_reference_counts(path: Optional[str] = None) -> ReferenceCounts:
    """Return {(m, n): {quantity: count}} with unpublished cells left out."""
    path = path or config.REFERENCE_COUNTS_FILE
    frame = _read(path, ("m", "n", *REFERENCE_COLUMNS))

    counts: ReferenceCounts = {}
    for row in frame.to_dict(orient="records"):
        key = (int(row["m"]), int(row["n"]))
        counts[key] = {q: int(row[q]) for q in REFERENCE_COLUMNS if row[q].strip()}
    logger.debug("Loaded %d reference rows from %s", len(counts), path)
    return counts


def load_reference_errata(path: Optional[str] = None) -> List[Erratum]:
    path = path or config.REFERENCE_ERRATA_FILE
    frame = _read(path, ERRATA_COLUMNS)
    errata = [
        Erratum(
            m=int(row["m"]),
            n=int(row["n"]),
            quantity=row["quantity"].strip().upper(),
            published=int(row["published"]),
            corrected=int(row["corrected"]),
        )
        for row in frame.to_dict(orient="records")
    ]
    unknown = [e.quantity for e in errata if e.quantity not in REFERENCE_COLUMNS]
    if unknown:
        raise ValueError(f"{path} names unknown quantities {unknown}")
    return errata
