"""Rewrite tests/golden/*.json from the current engine output.

Run after an intentional change to reports, then review the diff:
    python tools/update_golden.py
"""

from __future__ import annotations

import json
from pathlib import Path

from tanglekit.cli import batch, load
from tanglekit.report import build_report

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "tests" / "data" / "corpus"
GOLDEN = ROOT / "tests" / "golden"


def dump(obj, path: Path) -> None:
    path.write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def main() -> None:
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for path in sorted(CORPUS.glob("*.pd")):
        report = build_report(load(path, research=True), research=True)
        dump(report, GOLDEN / f"{path.stem}.json")
        print(path.stem, [c["conclusion"] for c in report["certificates"]])
    summary = batch(CORPUS, research=True)
    dump(summary, GOLDEN / "batch.json")


if __name__ == "__main__":
    main()
