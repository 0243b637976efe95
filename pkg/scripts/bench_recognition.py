"""Time the BFS recognition test on generated graphs of doubling size.

    python3 scripts/bench_recognition.py --start 100 --steps 5
"""

import argparse
import time

from halin.generator import GeneratorParams, generate_halin
from halin.recognition import recognize_paper


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--start", type=int, default=100, help="internal vertices of the smallest graph")
    ap.add_argument("--steps", type=int, default=5)
    ap.add_argument("--max-children", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    print(f"{'n':>6} {'m':>6} {'roots':>6} {'verdict':>8} {'seconds':>8} {'ratio':>6}")
    prev = None
    for i in range(args.steps):
        g, _ = generate_halin(GeneratorParams(args.start << i, args.max_children, args.seed))
        t0 = time.perf_counter()
        report = recognize_paper(g)
        dt = time.perf_counter() - t0
        ratio = f"{dt / prev:.2f}" if prev else "-"
        roots = len(report.roots_tried) + report.is_halin
        print(f"{g.vertex_count:>6} {g.edge_count:>6} {roots:>6} {report.verdict.value:>8} {dt:>8.3f} {ratio:>6}")
        prev = dt


if __name__ == "__main__":
    main()
