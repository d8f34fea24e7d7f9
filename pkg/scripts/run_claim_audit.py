#!/usr/bin/env python3
"""Run the claim audit across the standard model family.

One report per model, in family order: truncated integration tables in both
orientations, the free half-shuffle tables, and the trivial models.  The
orientation gate is picked per table (right first) unless forced.

    python scripts/run_claim_audit.py
    python scripts/run_claim_audit.py --max-n 5 --claims lie_admissible,center_symmetric
    python scripts/run_claim_audit.py --format json --out audit.json
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from zinbielkit import fuzz
from zinbielkit.algebra import left_zinbiel_residuals, right_zinbiel_residuals
from zinbielkit.audit import audit_claims, audit_report_jsonable, audit_report_text


@dataclass(frozen=True)
class AuditRunConfig:
    max_n: int = 8
    orientation: str = "auto"
    claims: tuple[str, ...] | None = None
    workers: int = 1
    format: str = "text"
    out: Path | None = None


def pick_orientation(table, requested: str) -> str:
    if requested != "auto":
        return requested
    if not right_zinbiel_residuals(table, first_only=True):
        return "right"
    if not left_zinbiel_residuals(table, first_only=True):
        return "left"
    return "right"


def run(config: AuditRunConfig) -> str:
    chunks: list[str] = []
    payloads: list[dict] = []
    for name, table in fuzz.standard_models(config.max_n):
        report = audit_claims(
            table,
            pick_orientation(table, config.orientation),
            claims=list(config.claims) if config.claims else None,
            subject=name,
            workers=config.workers,
        )
        chunks.append(audit_report_text(report))
        payloads.append(audit_report_jsonable(report))
    if config.format == "json":
        collection = {"kind": "claim_audit_collection", "reports": payloads}
        return json.dumps(collection, indent=2, sort_keys=True) + "\n"
    return "\n".join(chunks)


def main(argv: list[str] | None = None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=8, metavar="N",
                   help="largest truncation order to include")
    p.add_argument("--orientation", choices=("auto", "right", "left"), default="auto")
    p.add_argument("--claims", default=None, help="comma-separated claim filter")
    p.add_argument("--parallel", type=int, default=1, metavar="N")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", type=Path, default=None, metavar="FILE")
    args = p.parse_args(argv)

    config = AuditRunConfig(
        max_n=args.max_n,
        orientation=args.orientation,
        claims=tuple(args.claims.split(",")) if args.claims else None,
        workers=args.parallel,
        format=args.format,
        out=args.out,
    )
    text = run(config)
    if config.out:
        config.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
