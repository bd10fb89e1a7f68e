"""Edge irregularity strength of graphs, with exact results for cycle-star graphs."""
from .constructions import ConstructionResult, closed_form_es, construct_labeling
from .graph import (CycleStarSpec, Graph, GraphFormatError, VertexLabeling, build_cycle_star,
                    max_degree, parse_graph, parse_labeling, serialize_graph,
                    serialize_labeling)
from .harness import SweepRow, conjectured_es, emit_report, formula_es, sweep
from .solver import (EsResult, SearchBudget, Solver, Unknown, brute_force_es, exact_es,
                     find_irregular_labeling)
from .verifier import Verdict, WeightProfile, edge_weights, is_edge_irregular, lower_bound

__version__ = "0.1.0"
