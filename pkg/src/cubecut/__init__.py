"""Linear and cyclic embedding metrics of graphs, with tooling for the cyclic cutwidth of Q_n."""

__version__ = "0.1.0"

from .hypercube import (Facet, Graph, GuardError, Numbering, build_hypercube, facets,
                        gray_numbering, lex_numbering)
from .metrics import (cyclic_bandwidth, cyclic_cutwidth_of_numbering, cyclic_distance,
                      cyclic_wirelength, cut_profile_cyclic, linear_bandwidth,
                      linear_cutwidth, linear_wirelength)
