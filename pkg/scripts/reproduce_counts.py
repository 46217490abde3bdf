"""Print brute-force counts next to the closed forms for a grid of (a, b, n).

    python scripts/reproduce_counts.py
    python scripts/reproduce_counts.py --max-length 20
"""

import argparse
import time

from cylpaths.enumeration import brute_force_legal_words, count_formula
from cylpaths.params import LegalityMode, Params


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-ab", type=int, default=6, help="largest a and b to try")
    parser.add_argument("--max-length", type=int, default=16, help="largest word length (a+b)*n")
    args = parser.parse_args()

    print(f"{'a':>2} {'b':>2} {'n':>2} {'mode':>6} {'formula':>10} {'brute':>10}  ok   secs")
    bad = 0
    for a in range(1, args.max_ab + 1):
        for b in range(1, args.max_ab + 1):
            p = Params(a, b)
            modes = [LegalityMode.STRICT] if p.coprime else [LegalityMode.STRICT, LegalityMode.MODM]
            for n in range(1, args.max_length // p.m + 1):
                for mode in modes:
                    start = time.perf_counter()
                    brute = len(brute_force_legal_words(p, n, mode, override=True))
                    formula = count_formula(p, n, mode)
                    bad += brute != formula
                    print(
                        f"{a:>2} {b:>2} {n:>2} {mode.value:>6} {formula:>10} {brute:>10}  "
                        f"{'yes' if brute == formula else 'NO ':3} {time.perf_counter() - start:6.2f}"
                    )
    print(f"{bad} mismatches")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
