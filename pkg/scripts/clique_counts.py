"""Mean maximal-clique counts and search steps on G(n, p), 10 seeds per cell.

Prints, per cell, the measured mean count, the closed-form expectation and
the reference value, followed by mean steps and search time per strategy.

    python scripts/clique_counts.py
    python scripts/clique_counts.py --cells 100:0.6 300:0.3 --strategies greedybb tomitabb
"""
import argparse

from bitmce.bench import expected_maximal_cliques, mean_rows, random_sources, run_matrix

REFERENCE_MU = {(100, 0.6): 61658, (300, 0.1): 3773, (300, 0.3): 91395, (500, 0.2): 100261}


def parse_cell(text):
    n, p = text.split(":")
    return int(n), float(p)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cells", nargs="+", type=parse_cell, default=list(REFERENCE_MU))
    ap.add_argument("--strategies", nargs="+",
                    default=["greedybb", "greedybbtx", "greedybbnx", "tomitabb", "tomita", "naude"])
    ap.add_argument("--runs", type=int, default=10)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    for n, p in args.cells:
        runs = run_matrix(random_sources(n, p, range(1, args.runs + 1)), args.strategies, jobs=args.jobs)
        means = mean_rows(runs)
        mu = means[0].clique_count
        ref = REFERENCE_MU.get((n, p))
        ref_txt = f"  reference {ref}  ({(mu - ref) / ref:+.1%})" if ref else ""
        print(f"n={n} p={p}: mean {mu:.0f}  expected {expected_maximal_cliques(n, p):.0f}{ref_txt}")
        for m in means:
            print(f"    {m.strategy:<11} steps {m.steps:>12.0f}  time {m.elapsed:8.3f}s")


if __name__ == "__main__":
    main()
