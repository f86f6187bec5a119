"""Check the enveloping-algebra relations for every Lie fixture in data/.

For each algebra prints the number of compositions checked, whether all
reduce to 0, and the PBW-type counts next to the elimination oracle.
"""
import argparse
import time
from pathlib import Path

from rsgs.cli import load_presentation
from rsgs.lie import enveloping_presentation, pbw_basis, verify_theorem
from rsgs.oracle import quotient_dims

DATA = Path(__file__).resolve().parent.parent / "data"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=4)
    ap.add_argument("files", nargs="*", type=Path)
    args = ap.parse_args()
    files = args.files or sorted(DATA.glob("*.json"))

    for path in files:
        pf = load_presentation(path)
        if pf.lie is None:
            continue
        t0 = time.perf_counter()
        try:
            rep = verify_theorem(pf.lie)
        except ValueError as exc:
            print(f"{path.stem:<12} invalid: {exc}")
            continue
        pbw = pbw_basis(pf.lie, args.max_degree).counts
        dims = quotient_dims(enveloping_presentation(pf.lie), args.max_degree)
        dt = time.perf_counter() - t0
        print(f"{path.stem:<12} dim={pf.lie.dim} checked={rep.checked:<3} passed={rep.passed!s:<5} "
              f"pbw={list(pbw.values())} oracle={list(dims.values())} ({dt:.2f}s)")


if __name__ == "__main__":
    main()
