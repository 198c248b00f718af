#!/usr/bin/env python3
"""MILP backend for qclique: reads a free MPS file, solves it with
scipy.optimize.milp (HiGHS) and writes "name value" lines.

usage: scipy_backend.py MODEL.mps SOLUTION.txt TIME_LIMIT
"""

import sys

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp
from scipy.sparse import coo_matrix


def read_mps(path):
    rows, row_kind, row_index = [], {}, {}
    objective = None
    cols, col_index, integer = [], {}, []
    entries, obj, rhs = [], {}, {}
    lower, upper = {}, {}
    maximize = False
    section = None
    in_int = False
    with open(path) as fh:
        for raw in fh:
            line = raw.rstrip("\n")
            if not line.strip() or line.startswith("*"):
                continue
            tokens = line.split()
            if not line[0].isspace():
                section = tokens[0]
                if section == "OBJSENSE" and len(tokens) > 1:
                    maximize = tokens[1].upper().startswith("MAX")
                continue
            if section == "OBJSENSE":
                maximize = tokens[0].upper().startswith("MAX")
            elif section == "ROWS":
                kind, name = tokens
                if kind == "N":
                    objective = name
                else:
                    row_index[name] = len(rows)
                    rows.append(name)
                    row_kind[name] = kind
            elif section == "COLUMNS":
                if len(tokens) >= 3 and tokens[1] == "'MARKER'":
                    in_int = tokens[2] == "'INTORG'"
                    continue
                col = tokens[0]
                if col not in col_index:
                    col_index[col] = len(cols)
                    cols.append(col)
                    integer.append(in_int)
                for r, v in zip(tokens[1::2], tokens[2::2]):
                    if r == objective:
                        obj[col] = float(v)
                    else:
                        entries.append((row_index[r], col_index[col], float(v)))
            elif section == "RHS":
                for r, v in zip(tokens[1::2], tokens[2::2]):
                    if r != objective:
                        rhs[r] = float(v)
            elif section == "BOUNDS":
                kind, col = tokens[0], tokens[2]
                value = float(tokens[3]) if len(tokens) > 3 else None
                if kind == "BV":
                    lower[col], upper[col] = 0.0, 1.0
                elif kind == "FX":
                    lower[col] = upper[col] = value
                elif kind == "FR":
                    lower[col], upper[col] = -np.inf, np.inf
                elif kind == "MI":
                    lower[col] = -np.inf
                elif kind == "PL":
                    upper[col] = np.inf
                elif kind == "LO":
                    lower[col] = value
                elif kind == "UP":
                    upper[col] = value
                else:
                    raise ValueError("unsupported bound type " + kind)
    return dict(rows=rows, row_kind=row_kind, cols=cols, integer=integer, entries=entries,
                obj=obj, rhs=rhs, lower=lower, upper=upper, maximize=maximize)


def solve(model, time_limit):
    n = len(model["cols"])
    c = np.array([model["obj"].get(name, 0.0) for name in model["cols"]])
    if model["maximize"]:
        c = -c
    lb = np.array([model["lower"].get(name, 0.0) for name in model["cols"]])
    ub = np.array([model["upper"].get(name, np.inf) for name in model["cols"]])
    constraints = []
    if model["rows"]:
        r, col, v = zip(*model["entries"]) if model["entries"] else ((), (), ())
        a = coo_matrix((v, (r, col)), shape=(len(model["rows"]), n)).tocsr()
        lo = np.full(len(model["rows"]), -np.inf)
        hi = np.full(len(model["rows"]), np.inf)
        for i, name in enumerate(model["rows"]):
            b = model["rhs"].get(name, 0.0)
            kind = model["row_kind"][name]
            if kind in ("G", "E"):
                lo[i] = b
            if kind in ("L", "E"):
                hi[i] = b
        constraints.append(LinearConstraint(a, lo, hi))
    return milp(c, constraints=constraints, integrality=np.array(model["integer"], dtype=int),
                bounds=Bounds(lb, ub), options={"time_limit": time_limit, "disp": False})


def main(argv):
    if len(argv) != 4:
        sys.stderr.write(__doc__)
        return 2
    model = read_mps(argv[1])
    result = solve(model, float(argv[3]))
    with open(argv[2], "w") as out:
        if result.status == 2:
            out.write("# status: infeasible\n")
            return 0
        if result.x is None:
            out.write("# status: time_limit\n" if result.status == 1 else "# status: error\n")
            return 0 if result.status == 1 else 1
        out.write("# status: %s\n" % ("optimal" if result.status == 0 else "time_limit"))
        for name, value, is_int in zip(model["cols"], result.x, model["integer"]):
            if is_int:
                value = round(value) if abs(value - round(value)) <= 1e-6 else value
            out.write("%s %r\n" % (name, float(value)))
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
