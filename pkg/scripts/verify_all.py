"""Run every verification suite at the default bounds and time each one."""
import argparse
import sys
import time

from assocop.suites import SUITES, Bounds, run_suite


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-degree", type=int, help="cap every bound at this degree")
    p.add_argument("--jobs", type=int, default=1)
    a = p.parse_args()
    bounds = Bounds() if a.max_degree is None else Bounds().capped(a.max_degree)
    ok = True
    for name in SUITES:
        t0 = time.perf_counter()
        rep = run_suite(name, bounds, jobs=a.jobs)
        print(f"{rep}  ({time.perf_counter() - t0:.1f}s)")
        for task, detail in rep.failures[:5]:
            print(f"    {task}: {detail!r}")
        ok &= rep.ok
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
