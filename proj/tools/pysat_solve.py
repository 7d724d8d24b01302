#!/usr/bin/env python3
"""Minimal DIMACS front end over python-sat.

Usage: pysat_solve.py [--solver NAME] FILE.cnf

Prints competition-style "s" and "v" lines and exits 10 (SAT), 20 (UNSAT)
or 0 (unknown), so it can stand in for a native solver binary.
"""
import argparse
import sys


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--solver", default="cadical195")
    parser.add_argument("cnf")
    args = parser.parse_args()

    try:
        from pysat.formula import CNF
        from pysat.solvers import Solver
    except ImportError:
        print("pysat_solve: python-sat is not installed", file=sys.stderr)
        return 127

    formula = CNF(from_file=args.cnf)
    print(f"c pysat {args.solver}")
    with Solver(name=args.solver, bootstrap_with=formula.clauses) as solver:
        result = solver.solve()
        if result is None:
            print("s UNKNOWN")
            return 0
        if not result:
            print("s UNSATISFIABLE")
            return 20
        print("s SATISFIABLE")
        model = solver.get_model() or []
        line = ["v"]
        for lit in model:
            line.append(str(lit))
            if len(line) >= 20:
                print(" ".join(line))
                line = ["v"]
        line.append("0")
        print(" ".join(line))
        return 10


if __name__ == "__main__":
    sys.exit(main())
