"""Table of good-word counts per length: enumeration vs. the Euler-transform recurrence."""
import argparse
import time

from rsgs.gs import degree_counts
from rsgs.oracle import count_good
from rsgs.terms import Alphabet, enumerate_good


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--letters", type=int, default=2)
    ap.add_argument("--max-length", type=int, default=6)
    args = ap.parse_args()

    print(f"{'k':>2} {'n':>3} {'enumerated':>11} {'recurrence':>11} {'seconds':>8}")
    for k in range(1, args.letters + 1):
        A = Alphabet.from_names([f"x{i}" for i in range(1, k + 1)])
        t0 = time.perf_counter()
        counts = degree_counts(enumerate_good(A, args.max_length), args.max_length)
        dt = time.perf_counter() - t0
        for n in range(1, args.max_length + 1):
            flag = "" if counts[n] == count_good(k, n) else "  MISMATCH"
            print(f"{k:>2} {n:>3} {counts[n]:>11} {count_good(k, n):>11} {dt:>8.3f}{flag}")


if __name__ == "__main__":
    main()
