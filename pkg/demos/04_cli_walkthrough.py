# The phir command line, driven in-process

import io
import json

from phir.cli import run


def phir(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    print(f"$ phir {' '.join(argv)}   (exit {code})")
    print(out.getvalue() or err.getvalue())
    return code, out.getvalue()


phir("ideals", "--ring", "Z/12", "--format", "table")
phir("classify", "--ring", "Z x Z/4", "--ideal", "gen (0,2)", "--phi", "zero", "--format", "table")
phir("verify", "--theorem", "rad", "--corpus", "zn:2..20", "--phi", "zero", "--format", "table")
phir("verify", "--theorem", "product-tqr", "--ring", "Z x Z/2", "--n", "2", "--format", "table")
phir("search", "--have", "r", "--lack", "prime", "--corpus", "zn:2..20", "--format", "table")

code, out = phir("classify", "--ring", "Z/8", "--ideal", "gen 4", "--class", "r", "--format", "json")
print("json keys:", sorted(json.loads(out)))

phir("classify", "--ring", "Z/1", "--ideal", "gen")
