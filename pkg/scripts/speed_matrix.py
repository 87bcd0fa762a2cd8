"""greedybb against tomitabb: mean search time per (n, p) cell on one worker.

Cells run cheapest first under a wall-clock budget; any cell that cannot
finish inside it is reported as a timeout.

    python scripts/speed_matrix.py --budget 600
    python scripts/speed_matrix.py --n 100 300 --p 0.3 0.5 --budget 120
"""
import argparse

from bitmce.bench import compare_speed, expected_maximal_cliques


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", nargs="+", type=int, default=[100, 300, 500])
    ap.add_argument("--p", nargs="+", type=float, default=[0.3, 0.5, 0.6])
    ap.add_argument("--a", default="greedybb")
    ap.add_argument("--b", default="tomitabb")
    ap.add_argument("--runs", type=int, default=10)
    ap.add_argument("--budget", type=float, default=600.0)
    args = ap.parse_args()

    cells = [(n, p) for n in args.n for p in args.p]
    for n, p in sorted(cells, key=lambda c: expected_maximal_cliques(*c)):
        print(f"n={n} p={p}: ~{expected_maximal_cliques(n, p):,.0f} maximal cliques expected")
    results = compare_speed(cells, args.a, args.b, range(1, args.runs + 1), args.budget, log=print)
    wins = sum(r.a_wins for r in results)
    print(f"{args.a} no slower than {args.b} on {wins}/{len(cells)} cells")


if __name__ == "__main__":
    main()
