#!/usr/bin/env python3
"""Rebuild tests/corpus (CLI inputs) and tests/goldens (expected outputs).

Every golden produced through the command line goes through cli.main with
repo-root-relative paths, so the bytes match what the tests invoke.  The
script refuses to finish if the frozen refutation witnesses are missing
from the audit goldens; that guards against silent engine drift.

    python scripts/regenerate_goldens.py
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from zinbielkit import cli
from zinbielkit.algebra import algebra_from_entries
from zinbielkit.bialgebra import BialgebraCandidate, equivalence_audit
from zinbielkit.bimodule import Bimodule, regular_bimodule
from zinbielkit.fuzz import DEFAULT_SEED, seeded_candidates
from zinbielkit.matched_pair import zero_matched_pair
from zinbielkit.models import trunc_integration
from zinbielkit.serialization import dump_path
from zinbielkit.tensors import Matrix

# witnesses the audit goldens must carry, frozen against an independent oracle
REQUIRED_WITNESSES = {
    "audit_trunc_right_5.txt": (
        "at (e0,e1,e2): residual = -(1/30)e5",
        "at (e0,e0,e1): lhs = (1/2)e3, rhs = (1/3)e3",
    ),
    "audit_trunc_left_3.txt": (
        "at (e1,e0,e2): lhs = (1/3)e3, rhs = (2/3)e3",
    ),
}


@dataclass(frozen=True)
class GoldenConfig:
    root: Path
    seed: int = DEFAULT_SEED


def _cli(argv: list[str], expect: int = 0):
    code = cli.main(argv)
    if code != expect:
        raise SystemExit(f"cli {argv} exited {code}, expected {expect}")


def _broken_bimodule() -> Bimodule:
    b = regular_bimodule(trunc_integration(3, "right"))
    maps = list(b.left_maps)
    entries = dict(maps[1].entries)
    entries[(0, 0)] = entries.get((0, 0), Fraction(0)) + 1
    maps[1] = Matrix(b.v_dim, b.v_dim, entries)
    return Bimodule(b.base, b.v_dim, tuple(maps), b.right_maps)


def write_corpus(corpus: Path):
    corpus.mkdir(parents=True, exist_ok=True)
    t2 = trunc_integration(2, "right")
    t3 = trunc_integration(3, "right")

    _cli(["model", "trunc-int:right:3", "--out", str(corpus / "model_t3.json")])
    _cli(["model", "trunc-int:left:3", "--out", str(corpus / "model_l3.json")])
    _cli(["construct", "dual", "trunc-int:right:3", "--out", str(corpus / "dual_t3.json")])
    dump_path(corpus / "regular_t3_bimodule.json", regular_bimodule(t3))
    dump_path(corpus / "broken_bimodule.json", _broken_bimodule())
    dump_path(corpus / "zero_pair.json", zero_matched_pair(t3, t2))
    dump_path(
        corpus / "candidate_t2_zero.json",
        BialgebraCandidate(t2, algebra_from_entries(3, [])),
    )
    (corpus / "malformed.json").write_text("{ this is not json\n", encoding="utf-8")
    (corpus / "bad_kind.json").write_text('{"kind": "mystery"}\n', encoding="utf-8")


def write_goldens(goldens: Path, seed: int):
    goldens.mkdir(parents=True, exist_ok=True)

    for fmt in ("text", "json"):
        ext = "txt" if fmt == "text" else "json"
        _cli(
            ["audit", "--model", "trunc-int:right:5", "--orientation", "right",
             "--format", fmt, "--out", str(goldens / f"audit_trunc_right_5.{ext}")]
        )
        _cli(
            ["audit", "--model", "trunc-int:left:3", "--orientation", "left",
             "--format", fmt, "--out", str(goldens / f"audit_trunc_left_3.{ext}")]
        )

    reports = [
        json.loads((goldens / "audit_trunc_right_5.json").read_text(encoding="utf-8")),
        json.loads((goldens / "audit_trunc_left_3.json").read_text(encoding="utf-8")),
    ]
    combined = {"kind": "claim_audit_collection", "reports": reports}
    (goldens / "claim_audit.json").write_text(
        json.dumps(combined, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )

    _cli(
        ["audit", "regular-bimodule:trunc-int:right:5",
         "--out", str(goldens / "audit_bimodule_regular_t5.txt")]
    )
    _cli(
        ["audit", "tests/corpus/dual_t3.json",
         "--out", str(goldens / "audit_coalgebra_dual_t3.txt")]
    )
    _cli(
        ["audit", "tests/corpus/candidate_t2_zero.json",
         "--out", str(goldens / "audit_candidate_t2_zero.txt")]
    )

    _cli(
        ["check", "trunc-int:right:3", "right_zinbiel",
         "--out", str(goldens / "check_right_zinbiel_t3.txt")]
    )
    _cli(
        ["check", "trunc-int:left:3", "right_zinbiel",
         "--out", str(goldens / "check_right_zinbiel_l3.txt")],
        expect=1,
    )
    _cli(
        ["construct", "semidirect", "regular-bimodule:trunc-int:right:3",
         "--out", str(goldens / "construct_semidirect_t3.json")]
    )

    lines = [f"candidate equivalence quadruples (seed {seed}, 20 candidates)"]
    for name, bc in seeded_candidates(seed):
        rep = equivalence_audit(bc)
        flags = " ".join(f"{v.name}={v.holds}" for v in rep.conditions)
        lines.append(f"{name}: {flags} agreement={rep.agreement}")
        for finding in rep.findings:
            lines.append(f"  finding: {finding}")
    (goldens / "equivalence_quadruples.txt").write_text(
        "\n".join(lines) + "\n", encoding="utf-8"
    )


def verify_witnesses(goldens: Path):
    for fname, needles in REQUIRED_WITNESSES.items():
        text = (goldens / fname).read_text(encoding="utf-8")
        for needle in needles:
            if needle not in text:
                raise SystemExit(f"{fname} is missing frozen witness {needle!r}")


def main(argv: list[str] | None = None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument(
        "--root", type=Path, default=Path(__file__).resolve().parents[1],
        help="repository root (default: the checkout containing this script)",
    )
    args = p.parse_args(argv)
    config = GoldenConfig(root=args.root)

    os.chdir(config.root)
    write_corpus(config.root / "tests" / "corpus")
    write_goldens(config.root / "tests" / "goldens", config.seed)
    verify_witnesses(config.root / "tests" / "goldens")
    print(f"corpus and goldens rebuilt under {config.root / 'tests'}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
