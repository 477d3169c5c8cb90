#!/usr/bin/env python3
"""Render SVG portraits of the asymptotic foliations of the saddle and
product families.

Example:
    python3 scripts/render_foliations.py --out out/ --m-max 6
"""

import argparse
import os
import sys

from hesstop.foliation import curves_to_svg, trace_foliation
from hesstop.polyalg import product_family, saddle_family
from hesstop.quadform import second_fundamental_form


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="out")
    ap.add_argument("--m-max", type=int, default=6)
    ap.add_argument("--seeds", type=int, default=18)
    args = ap.parse_args()

    os.makedirs(args.out, exist_ok=True)
    jobs = [(f"saddle_{m}", saddle_family(m)) for m in range(3, args.m_max + 1)]
    jobs += [("product_3_1", product_family(3, 1)), ("product_4_2", product_family(4, 2))]
    for name, f in jobs:
        cs = trace_foliation(second_fundamental_form(f), seeds=args.seeds)
        path = os.path.join(args.out, f"{name}.svg")
        curves_to_svg(cs, path)
        print(f"{path}: {cs.sector_count} separatrix lines, {len(cs.curves)} curves")
    return 0


if __name__ == "__main__":
    sys.exit(main())
