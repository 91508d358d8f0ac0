"""
The rdom command line
=====================

Each call below is equivalent to running ``rdom ...`` in a shell.
"""

import tempfile
from pathlib import Path

from restrained_dom.cli import main

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"
tmp = Path(tempfile.mkdtemp())


def run(*argv):
    print("$ rdom", " ".join(argv))
    code = main(list(argv))
    print(f"(exit {code})\n")


run("solve", str(DATA / "block_graph_14.graph"))
run("solve", "--json", str(DATA / "k13.graph"))
run("oracle", str(DATA / "p4.graph"))

(tmp / "bad.json").write_text('{"gamma_r": 1, "witness": [2], "method": "oracle"}')
run("check", str(DATA / "p3.graph"), str(tmp / "bad.json"))

run("gen-x3c", str(DATA / "x3c_cover.txt"), "-o", str(tmp / "x3c.graph"))
print((tmp / "x3c.graph").read_text().splitlines()[0])
run("random-rds", "--seed", "42", str(DATA / "block_graph_14.graph"))
run("bound", "--n", "10", "--delta", "3")
run("solve", "--dir", str(DATA))
