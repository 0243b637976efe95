"""Write a reproducible corpus of Halin graphs and perturbed negatives.

    python3 scripts/build_corpus.py corpus/ --count 100 --max-n 12
"""

import argparse
import json
from pathlib import Path

from halin.corpus import halin_corpus, negative_corpus
from halin.graph import to_edge_list


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("out", type=Path)
    ap.add_argument("--count", type=int, default=100, help="positives, and as many negatives")
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--odd-wheel-free", action="store_true")
    args = ap.parse_args()

    positives = halin_corpus(args.count, args.max_n, seed=args.seed, odd_wheel_free=args.odd_wheel_free)
    negatives = negative_corpus(positives, args.count, seed=args.seed)
    args.out.mkdir(parents=True, exist_ok=True)
    manifest = []
    for inst in positives + negatives:
        name = f"{inst.name}.edges"
        (args.out / name).write_text(to_edge_list(inst.graph))
        manifest.append({
            "file": name,
            "vertices": inst.graph.vertex_count,
            "edges": inst.graph.edge_count,
            "generated_halin": inst.cert is not None,
            "certificate": inst.cert.to_dict() if inst.cert else None,
            "mutation": inst.note or None,
        })
    (args.out / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    print(f"wrote {len(positives)} positives and {len(negatives)} negatives to {args.out}")


if __name__ == "__main__":
    main()
