#!/usr/bin/env python3
"""External solver adapter: highs_solve.py MODEL.lp SOLUTION.txt

Solves a CPLEX LP file with HiGHS and writes "name value" lines. Exits
non-zero without writing a solution when no optimum is found.
"""
import sys

import highspy


def main() -> int:
    if len(sys.argv) != 3:
        print("usage: highs_solve.py MODEL.lp SOLUTION.txt", file=sys.stderr)
        return 2
    h = highspy.Highs()
    h.setOptionValue("output_flag", False)
    if h.readModel(sys.argv[1]) != highspy.HighsStatus.kOk:
        return 1
    h.run()
    if h.getModelStatus() != highspy.HighsModelStatus.kOptimal:
        return 1
    values = h.getSolution().col_value
    lp = h.getLp()
    with open(sys.argv[2], "w", encoding="ascii") as out:
        for name, value in zip(lp.col_names_, values):
            out.write(f"{name} {round(value)}\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
