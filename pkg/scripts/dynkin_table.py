"""Table of Dynkin elements: M-support size, Lie dimension and idempotency, per degree."""
import argparse
import math

from assocop import lie
from assocop.algebra import to_f_basis


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=5)
    a = p.parse_args()
    print(f"{'n':>2} {'|supp M|':>9} {'|supp F|':>9} {'dim L_n':>8} {'(n-1)!':>7} {'theta^2 = n theta':>18}")
    for n in range(1, a.max_n + 1):
        theta = lie.dynkin_m(n)
        print(f"{n:>2} {len(theta):>9} {len(to_f_basis(theta)):>9} {len(lie.lie_span(n)):>8} "
              f"{math.factorial(n - 1):>7} {str(lie.dynkin_is_quasi_idempotent(n)):>18}")


if __name__ == "__main__":
    main()
