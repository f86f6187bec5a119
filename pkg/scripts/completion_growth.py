"""Completion of a presentation at increasing degree bounds.

Besides running ``complete`` at each bound, counts per degree the minimal
leading words of the truncated ideal (leading words with no other leading
word as a proper subtree).  A reduced Groebner-Shirshov basis has exactly
one relation per minimal leading word, so steady growth of these counts
means no finite completion exists.
"""
import argparse
import time
from collections import Counter
from pathlib import Path

from rsgs.cli import load_presentation
from rsgs.gs import complete, degree_counts, irr, occurrences, subwords
from rsgs.oracle import ideal_span, quotient_dims

DATA = Path(__file__).resolve().parent.parent / "data"


def minimal_leads(S, max_degree):
    leads = set(ideal_span(S, max_degree).rows)
    minimal = [w for w in leads if not any(v in leads for p, v in subwords(w) if p)]
    return Counter(w.length for w in minimal)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("file", type=Path, nargs="?", default=DATA / "cb_ca.json")
    ap.add_argument("--max-degree", type=int, default=4)
    ap.add_argument("--oracle-degree", type=int, default=6)
    args = ap.parse_args()
    S = load_presentation(args.file).presentation()

    for d in range(2, args.max_degree + 1):
        t0 = time.perf_counter()
        S2, status = complete(S, d)
        counts = degree_counts(irr(S2, min(d, 4)), min(d, 4))
        oracle = quotient_dims(S, min(d, 4))
        print(f"complete(max_degree={d}): {status}, {len(S2.relations)} relations, "
              f"lead degrees {sorted(r.degree for r in S2.relations)}, "
              f"irr {list(counts.values())} vs oracle {list(oracle.values())} "
              f"({time.perf_counter() - t0:.1f}s)")

    t0 = time.perf_counter()
    mins = minimal_leads(S, args.oracle_degree)
    print(f"minimal leading words of the ideal up to degree {args.oracle_degree}: "
          f"{dict(sorted(mins.items()))} ({time.perf_counter() - t0:.1f}s)")


if __name__ == "__main__":
    main()
