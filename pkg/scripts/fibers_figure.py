"""
Write the Hasse diagram of the weak order with the P_i fibers in bold, and
render it with Graphviz when the ``dot`` binary is available.
"""
import argparse
import shutil
import subprocess
from pathlib import Path

from assocop.cli import fibers_dot, fibers_text


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--i", type=int, default=1)
    p.add_argument("--out", type=Path, default=Path("fibers.dot"))
    a = p.parse_args()
    print(fibers_text(a.n, a.m, a.i), end="")
    a.out.write_text(fibers_dot(a.n, a.m, a.i))
    print(f"wrote {a.out}")
    if shutil.which("dot"):
        svg = a.out.with_suffix(".svg")
        subprocess.run(["dot", "-Tsvg", str(a.out), "-o", str(svg)], check=True)
        print(f"wrote {svg}")


if __name__ == "__main__":
    main()
