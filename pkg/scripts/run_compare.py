"""Build a corpus, run the BFS-test-vs-oracle comparison, and save the report.

    python3 scripts/run_compare.py --out reports/compare.json
"""

import argparse
import json
import tempfile
from pathlib import Path

from halin.cli import COMPARE_MAX_N, compare_corpus
from halin.corpus import halin_corpus, negative_corpus
from halin.graph import to_edge_list
from halin.recognition import DEFAULT_ORACLE_BOUND


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--out", type=Path, default=Path("reports/compare.json"))
    args = ap.parse_args()

    positives = halin_corpus(args.count, COMPARE_MAX_N, seed=args.seed)
    negatives = negative_corpus(positives, args.count, seed=args.seed)
    with tempfile.TemporaryDirectory() as tmp:
        files = []
        for inst in positives + negatives:
            path = Path(tmp) / f"{inst.name}.edges"
            path.write_text(to_edge_list(inst.graph))
            files.append(path)
        report = compare_corpus(sorted(files), COMPARE_MAX_N, DEFAULT_ORACLE_BOUND)

    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(json.dumps(report, indent=2, sort_keys=True) + "\n")
    for key, value in report["summary"].items():
        print(f"{key:>26}: {value}")
    print(f"report: {args.out}")


if __name__ == "__main__":
    main()
