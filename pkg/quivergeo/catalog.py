"""
Bundled example problems, addressable as "bundled:<name>".
"""

from typing import Dict, List

from .errors import ProblemFileError
from .graded import ProblemSpec
from .problem import ProblemFile, parse_problem

BUNDLED: Dict[str, str] = {
    "P1": """
field: Q
n: 1
polys:
""",
    "P2": """
field: Q
n: 2
polys:
""",
    "conic": """
# smooth conic in P^2
field: Q
n: 2
polys:
  X0*X2 - X1^2
""",
    "point-pair": """
# two points [1:0] and [0:1]
field: Q
n: 1
polys:
  X0*X1
""",
    "coordinate-point": """
# the point [0:0:1]
field: Q
n: 2
polys:
  X0
  X1
""",
    "twisted-cubic": """
# 2x2 minors of [[X0, X1, X2], [X1, X2, X3]]
field: Q
n: 3
polys:
  X0*X2 - X1^2
  X0*X3 - X1*X2
  X1*X3 - X2^2
""",
    "fermat-cubic": """
field: Q
n: 2
polys:
  X0^3 + X1^3 + X2^3
""",
    "empty": """
# no points; d = 2 so the triple model exists
field: Q
n: 2
d: 2
polys:
  X0
  X1
  X2
""",
}


def bundled_names() -> List[str]:
    return list(BUNDLED)


def bundled_problem(name: str) -> ProblemFile:
    """
    Raises:
        ProblemFileError: If no example has this name
    """
    if name not in BUNDLED:
        raise ProblemFileError(
            f"unknown bundled example {name!r}; choose from {bundled_names()}",
            1,
            1,
            f"bundled:{name}",
        )
    return parse_problem(BUNDLED[name], source=f"bundled:{name}")


def bundled_spec(name: str) -> ProblemSpec:
    return bundled_problem(name).to_spec()
