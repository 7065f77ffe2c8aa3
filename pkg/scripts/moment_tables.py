#!/usr/bin/env python3
"""Print power-moment tables: recursive values next to the brute-force oracle.

Usage: python scripts/moment_tables.py [--r 2 3] [--h-max 10]
"""

import argparse

from ksums import charsums, coset_codes, field, moments


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--h-max", type=int, default=10, dest="h_max")
    args = ap.parse_args()

    for r in args.r:
        fp = field.binary_field(r)
        q = fp.q
        fams = [coset_codes.parse_family("dc1+", 2, fp),
                coset_codes.parse_family("dc1-", 3, fp)]
        if q >= 8:
            fams.append(coset_codes.parse_family("dc1-", 1, fp))
        print(f"== MK^h over GF({q}) ==")
        header = ["h", "oracle"] + [f"{f.label} n={f.n}" for f in fams]
        print("  ".join(f"{h:>24}" for h in header))
        for h in range(args.h_max + 1):
            row = [h, charsums.moment(fp, 1, h)]
            row += [moments.mk_recursive(f, h) for f in fams]
            print("  ".join(f"{v:>24}" for v in row))
        if q >= 4:
            print(f"== MK2^h over GF({q}) ==")
            fams2 = [coset_codes.parse_family("dc2+", 2, fp),
                     coset_codes.parse_family("dc2-", 3, fp)]
            header = ["h", "oracle"] + [f"{f.label} n={f.n}" for f in fams2]
            print("  ".join(f"{h:>24}" for h in header))
            for h in range(args.h_max + 1):
                row = [h, charsums.moment(fp, 2, h)]
                row += [moments.mk2_recursive(f, h) for f in fams2]
                print("  ".join(f"{v:>24}" for v in row))
        print()


if __name__ == "__main__":
    main()
