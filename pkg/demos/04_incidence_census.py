"""Incidence census: double counting points against hyperplane pencils.

Fix a variety X in P^n and a point P.  The hyperplanes through P form a
pencil of size pi(n-1), and every other point of X lies on exactly
pi(n-2) of them, so

    edges = (|X| - 1) * pi(n-2)

where edges counts incident (point, hyperplane) pairs.  When no
hyperplane contains a component of X, each hyperplane also sees at most
B' - 1 points of X \\ {P}, with B' the section bound, and chaining the
two facts caps |X| itself.  census_through_point records the whole
ledger; census_linear_component runs the variant that excises a linear
component L and only looks at hyperplanes not containing L.
"""

import json

from fqpoints.incidence import census_linear_component, census_through_point
from fqpoints.projgeom import point_from_text
from fqpoints.variety import load_variety

CUBIC_DOC = """\
field p=2 k=1
space n=3
component name=curve dim=1 deg=3 irreducible=yes
  poly x0*x2 - x1^2
  poly x0*x3 - x1*x2
  poly x1*x3 - x2^2
"""

LINE_AND_CUBIC_DOC = """\
field p=2 k=1
space n=3
component name=curve dim=1 deg=3 irreducible=yes
  poly x0*x2 - x1^2
  poly x0*x3 - x1*x2
  poly x1*x3 - x2^2
component name=L irreducible=yes
  poly x1
  poly x2
"""


def main():
    X = load_variety(CUBIC_DOC)
    P = point_from_text("1:0:0:0", X.field, 3)
    census = census_through_point(X, P)
    for line in census.trace():
        print(line)
    assert census.ok

    print()
    print("same census as JSON:")
    print(json.dumps(census.to_json_dict(), indent=2, sort_keys=True)[:400])
    print("  ...")

    # the variant for a variety with a linear component: remove the line,
    # census the rest against hyperplanes missing the line
    print()
    Y = load_variety(LINE_AND_CUBIC_DOC)
    Q = point_from_text("1:0:0:0", Y.field, 3)  # on L = V(x1, x2)
    census2 = census_linear_component(Y, "L", Q)
    for line in census2.trace():
        print(line)
    assert census2.ok


if __name__ == "__main__":
    main()
