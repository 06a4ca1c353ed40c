"""Shared variety documents and loaded fixtures."""

import pytest

from fqpoints.variety import load_variety

TWISTED_CUBIC_DOC = """\
# rational normal curve of degree 3
field p=2 k=1
space n=3
component name=curve dim=1 deg=3 irreducible=yes
  poly x0*x2 - x1^2
  poly x0*x3 - x1*x2
  poly x1*x3 - x2^2
"""

SKEW_LINES_DOC = """\
field p=2 k=1
space n=3
component name=L1 irreducible=yes
  poly x2
  poly x3
component name=L2 irreducible=yes
  poly x0
  poly x1
"""

PLANE_LINE_DOC = """\
field p=2 k=1
space n=3
component name=plane irreducible=yes
  poly x0
component name=line irreducible=yes
  poly x2
  poly x3
"""

QUADRIC_DOC = """\
field p=2 k=1
space n=3
component name=quadric dim=2 deg=2 irreducible=yes
  poly x0*x3 - x1*x2
"""

CONIC_IN_PLANE_DOC = """\
field p=2 k=1
space n=3
component name=conic irreducible=yes
  poly x3
  poly x0*x2 - x1^2
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


@pytest.fixture(scope="session")
def twisted_cubic_doc():
    return TWISTED_CUBIC_DOC


@pytest.fixture(scope="session")
def twisted_cubic():
    return load_variety(TWISTED_CUBIC_DOC)


@pytest.fixture(scope="session")
def skew_lines():
    return load_variety(SKEW_LINES_DOC)


@pytest.fixture(scope="session")
def plane_line():
    return load_variety(PLANE_LINE_DOC)


@pytest.fixture(scope="session")
def quadric():
    return load_variety(QUADRIC_DOC)


@pytest.fixture(scope="session")
def conic_in_plane():
    return load_variety(CONIC_IN_PLANE_DOC)


@pytest.fixture(scope="session")
def line_and_cubic():
    return load_variety(LINE_AND_CUBIC_DOC)
