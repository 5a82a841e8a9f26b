"""Catalogs of every (sign pattern, admissible pair) couple of one degree."""

from __future__ import annotations

import csv
import io
import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional

from descartes_lab.algebra.ratpoly import from_text
from descartes_lab.criteria.bounds import DEFAULT_WIDTH
from descartes_lab.criteria.classify import Classification, Searcher, WitnessBuilder, classify
from descartes_lab.signs.patterns import (
    AdmissiblePair,
    SignPattern,
    admissible_pairs,
    enumerate_patterns,
    enumerate_three_block,
)
from descartes_lab.witness.base import SCHEMA, certify

logger = logging.getLogger(__name__)

CSV_COLUMNS = ("degree", "pattern", "blocks", "pos", "neg", "status", "reason", "construction", "witness", "detail")


@dataclass
class Catalog:
    degree: int
    blocks_only: bool
    rows: list[Classification]

    def counts(self) -> dict[str, int]:
        totals: dict[str, int] = {}
        for row in self.rows:
            totals[row.status.value] = totals.get(row.status.value, 0) + 1
        return totals

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA,
            "degree": self.degree,
            "blocks_only": self.blocks_only,
            "counts": self.counts(),
            "rows": [row.to_dict() for row in self.rows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in self.rows:
            payload = row.to_dict()
            writer.writerow(
                {
                    "degree": payload["degree"],
                    "pattern": payload["pattern"],
                    "blocks": payload.get("blocks", ""),
                    "pos": row.ap.pos,
                    "neg": row.ap.neg,
                    "status": payload["status"],
                    "reason": payload["reason"],
                    "construction": payload.get("construction", ""),
                    "witness": payload.get("witness", ""),
                    "detail": payload.get("detail", ""),
                }
            )
        return buffer.getvalue()

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        raise ValueError(f"Unsupported format: {fmt}")


def catalog_couples(degree: int, *, blocks_only: bool = False) -> list[tuple[SignPattern, AdmissiblePair]]:
    """Couples in canonical order: pattern text, then (pos, neg) ascending."""

    if blocks_only:
        patterns = [blocks.pattern for blocks in enumerate_three_block(degree)]
    else:
        patterns = list(enumerate_patterns(degree))
    return [
        (sigma, ap)
        for sigma in patterns
        for ap in sorted(admissible_pairs(sigma), key=lambda pair: (pair.pos, pair.neg))
    ]


def build_catalog(
    degree: int,
    *,
    blocks_only: bool = False,
    with_witness: bool = False,
    threads: int = 1,
    search: Optional[Searcher] = None,
    builder: Optional[WitnessBuilder] = None,
    width: Fraction = DEFAULT_WIDTH,
) -> Catalog:
    couples = catalog_couples(degree, blocks_only=blocks_only)
    logger.info("Classifying %d couples of degree %d on %d threads", len(couples), degree, threads)

    def run(couple: tuple[SignPattern, AdmissiblePair]) -> Classification:
        sigma, ap = couple
        return classify(sigma, ap, with_witness=with_witness, search=search, builder=builder, width=width)

    if threads <= 1:
        rows = [run(couple) for couple in couples]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(run, couples))
    catalog = Catalog(degree, blocks_only, rows)
    logger.info("Catalog for degree %d: %s", degree, catalog.counts())
    return catalog


def write_catalog(catalog: Catalog, path: Path, fmt: str = "json") -> Path:
    path = Path(path)
    path.write_text(catalog.render(fmt), encoding="utf-8")
    logger.info("Wrote %d rows to %s", len(catalog.rows), path)
    return path


def reverify_rows(payload: dict[str, Any]) -> list[str]:
    """Re-certify every witness stored in a JSON catalog; returns the failing rows."""

    failures = []
    for row in payload.get("rows", []):
        if "witness" not in row:
            continue
        sigma = SignPattern.from_text(row["pattern"])
        ap = AdmissiblePair(*row["ap"])
        if not certify(from_text(row["witness"]), sigma, ap):
            failures.append(f"{row['pattern']} {ap}")
    return failures
