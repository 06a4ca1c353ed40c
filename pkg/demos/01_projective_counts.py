"""Counting points of projective spaces and checking the basic identities.

pi(j) = (q^(j+1) - 1) / (q - 1) counts the points of P^j(F_q).  Two
identities drive everything downstream:

    pi(n) = q * pi(n-1) + 1            (peel off a hyperplane)
    pi(a) - pi(b) = q^(b+1) * pi(a-b-1) for a >= b >= -1

This script tabulates pi for small q, verifies both identities against
brute-force point enumeration, and shows the affine/projective split.
"""

from fqpoints.gf import make_field
from fqpoints.projgeom import enumerate_points, pi


def main():
    print("pi(j, q) table")
    print("j\\q " + "".join(f"{q:>8}" for q in (2, 3, 4, 5)))
    for j in range(6):
        row = "".join(f"{pi(j, q):>8}" for q in (2, 3, 4, 5))
        print(f"{j:>3} {row}")

    # pi agrees with literally listing the points
    print()
    for q, k, modulus in ((2, 1, None), (3, 1, None), (4, 2, "x^2+x+1")):
        field = make_field(2 if q == 4 else q, k, modulus)
        for n in range(4):
            listed = sum(1 for _ in enumerate_points(n, field))
            assert listed == pi(n, q), (n, q)
        print(f"q={q}: enumeration of P^0..P^3 matches pi. ok")

    # the recursion, spelled out once
    print()
    q = 3
    for n in range(1, 8):
        lhs = pi(n, q)
        rhs = q * pi(n - 1, q) + 1
        print(f"pi({n}) = {lhs} = {q} * pi({n-1}) + 1 = {rhs}")
        assert lhs == rhs

    # the telescoped difference: pi(a) - pi(b) counts the points of
    # P^a outside a P^b, and that set is a disjoint union of affine pieces
    print()
    for a in range(8):
        for b in range(-1, a + 1):
            gap = pi(a, q) - pi(b, q)
            assert gap == q ** (b + 1) * pi(a - b - 1, q)
    print("difference identity holds for all -1 <= b <= a <= 7 (q=3). ok")

    # P^n = A^n plus a hyperplane at infinity
    print()
    for n in range(1, 6):
        print(f"pi({n}) = q^{n} + pi({n-1}):  {pi(n, q)} = {q**n} + {pi(n-1, q)}")


if __name__ == "__main__":
    main()
