"""
Summaries of the conjecture tables written by experiments.py

    python summarize_tables.py --conjecture1 reports/conjecture1.csv --conjecture2 reports/conjecture2.csv
"""
import argparse
import sys
from fractions import Fraction

import pandas as pd

UNDEFINED = "undefined"


def summarize_conjecture1(df: pd.DataFrame) -> pd.DataFrame:
    """Largest s_t/(t*s) per (n, t), with the count of rows where it is undefined"""
    df = df.copy()
    ratios = df["ratio"].astype(str)
    df["ratio_value"] = [None if r == UNDEFINED else Fraction(r) for r in ratios]
    df["undefined"] = ratios == UNDEFINED
    df["lower_bound"] = ~df["exhaustive"].astype(bool)

    rows = []
    for (n, t), group in df.groupby(["n", "t"], sort=True):
        ratios = [r for r in group["ratio_value"] if r is not None]
        best = max(ratios) if ratios else None
        rows.append({
            "n": n,
            "t": t,
            "graphs": group["graph_id"].nunique(),
            "max_s_t": group["s_t"].max(),
            "max_ratio": UNDEFINED if best is None else str(best),
            "max_ratio_float": float("nan") if best is None else float(best),
            "undefined_rows": int(group["undefined"].sum()),
            "lower_bound_rows": int(group["lower_bound"].sum()),
        })
    return pd.DataFrame(rows)


def summarize_conjecture2(df: pd.DataFrame) -> pd.DataFrame:
    """Separator sizes against ceil(sqrt|C|) per (n, cover source)"""
    df = df.copy()
    df["feasible"] = df["feasible"].astype(bool)
    rows = []
    for (n, source), group in df.groupby(["n", "cover_source"], sort=True):
        ok = group[group["feasible"]]
        rows.append({
            "n": n,
            "cover_source": source,
            "rows": len(group),
            "infeasible_rows": int((group["status"] == "infeasible").sum()),
            "skipped_rows": int((group["status"] == "skipped").sum()),
            "max_separator": ok["min_separator"].max() if len(ok) else None,
            "mean_cliques": round(group["cliques"].mean(), 3) if group["cliques"].notna().any() else None,
            "above_sqrt_bound": int((ok["min_separator"] > ok["sqrt_bound"]).sum()),
        })
    return pd.DataFrame(rows)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="Summarize conjecture tables")
    parser.add_argument("--conjecture1", help="CSV written by `experiments.py conjecture1 --csv`")
    parser.add_argument("--conjecture2", help="CSV written by `experiments.py conjecture2 --csv`")
    parser.add_argument("--out-prefix", help="Write <prefix>_conjecture1.csv / _conjecture2.csv")
    args = parser.parse_args(argv)

    if not args.conjecture1 and not args.conjecture2:
        parser.error("give --conjecture1 and/or --conjecture2")

    if args.conjecture1:
        summary = summarize_conjecture1(pd.read_csv(args.conjecture1))
        print("\n" + "=" * 70)
        print("CONJECTURE 1: max s_t/(t*s) per (n, t)")
        print("=" * 70)
        print(summary.drop(columns=["max_ratio_float"]).to_string(index=False))
        if summary["max_ratio_float"].notna().any():
            top = summary.loc[summary["max_ratio_float"].idxmax()]
            print(f"\n[info] largest ratio {top['max_ratio']} at n={top['n']}, t={top['t']}")
        if args.out_prefix:
            summary.to_csv(f"{args.out_prefix}_conjecture1.csv", index=False)

    if args.conjecture2:
        summary = summarize_conjecture2(pd.read_csv(args.conjecture2))
        print("\n" + "=" * 70)
        print("CONJECTURE 2: minimum balanced clique separator vs ceil(sqrt|C|)")
        print("=" * 70)
        print(summary.to_string(index=False))
        if args.out_prefix:
            summary.to_csv(f"{args.out_prefix}_conjecture2.csv", index=False)
    return 0


if __name__ == "__main__":
    sys.exit(main())
