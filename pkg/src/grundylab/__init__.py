"""Exact Grundy numbers of small graphs, and the machinery around them.

The package is organised as a small library:

* :mod:`grundylab.graphs` - the immutable bitmask graph type and structural
  queries (girth, induced cycles, independent-module partitions, powers);
* :mod:`grundylab.graph6` - the graph6 text codec;
* :mod:`grundylab.canon` - canonical forms for isomorphism deduplication;
* :mod:`grundylab.generate` - exhaustive regular-graph and small-graph
  generation;
* :mod:`grundylab.solver` - greedy colouring, Grundy validators, the
  factorial oracle and the pruned exact solvers;
* :mod:`grundylab.twins` - twin-vertex tests, the colour bounds they force,
  and the linear-time cubic classifier;
* :mod:`grundylab.atoms` - t-atom catalogs and induced-atom detection;
* :mod:`grundylab.families` - recursive family constructors and catalogs;
* :mod:`grundylab.verify` - batch verification campaigns over graph corpora;
* :mod:`grundylab.cli` - the command-line front end.
"""

from .graphs import (
    Graph,
    girth,
    has_induced_cycle,
    induced_cycles,
    maximal_independent_module_partition,
    neighbor_connected_induced_cycles,
    power_graph,
)
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .canon import are_isomorphic, canonical_form
from .generate import all_graphs, connected_graphs, enumerate_regular_graphs
from .solver import (
    Coloring,
    SearchBudgetExceeded,
    greedy_color,
    grundy_exact,
    grundy_oracle,
    grundy_witness,
    partial_grundy_exact,
    validate_grundy,
    validate_partial_grundy,
)
from .twins import (
    TwinWitness,
    cubic_grundy_linear,
    f3_membership,
    is_twin_vertex,
    twin_grundy_upper_bound,
)
from .atoms import (
    AtomCatalog,
    enumerate_atoms,
    has_induced_minimal_atom,
    minimal_atoms,
)
from .families import (
    BuildScript,
    build_G_rki,
    build_named,
    catalog_f3_cubic,
    parse_script,
    run_script,
)

__version__ = "0.1.0"
