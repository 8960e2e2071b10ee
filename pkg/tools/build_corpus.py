"""Regenerate the bundled alternating-knot corpus from the KnotInfo tables.

Needs the ``database_knotinfo`` package (not a runtime dependency).
Usage: python tools/build_corpus.py > src/altwrithe/data/alternating_knots_9.tsv
"""

import ast
import sys

from database_knotinfo import link_list


def main(max_crossings: int = 9) -> None:
    out = sys.stdout
    out.write(f"# alternating prime knots through {max_crossings} crossings, one chirality each\n")
    out.write("# PD codes from the KnotInfo database; name<TAB>pd\n")
    for row in link_list()[1:]:
        try:
            n = int(row["crossing_number"])
        except ValueError:
            continue
        if not 3 <= n <= max_crossings or row["alternating"] != "Y":
            continue
        pd = ast.literal_eval(row["pd_notation"])
        terms = " ".join("X[{},{},{},{}]".format(*x) for x in pd)
        out.write(f"{row['name']}\t{terms}\n")


if __name__ == "__main__":
    main(*(int(a) for a in sys.argv[1:]))
