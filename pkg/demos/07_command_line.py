"""
The command-line interface
===========================

Every operation is also available as ``kamean <subcommand>`` reading and
writing JSON matrix documents.  This script drives the CLI in-process.
"""
import contextlib
import io
import os
import tempfile

from kamean.cli import main

with tempfile.TemporaryDirectory() as tmp:
    a, b = os.path.join(tmp, "a.json"), os.path.join(tmp, "b.json")
    for path, seed in ((a, 1), (b, 2)):
        # `kamean gen` writes a random positive definite matrix to stdout
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            main(["gen", "--algebra", "H", "--n", "2", "--seed", str(seed)])
        with open(path, "w") as fh:
            fh.write(buf.getvalue())

    print("$ kamean mean --f geometric a.json b.json")
    main(["mean", "--f", "geometric", a, b])
    print("$ kamean dist a.json b.json")
    main(["dist", a, b])
    print("$ kamean verify --suite counterexample")
    main(["verify", "--suite", "counterexample"])
