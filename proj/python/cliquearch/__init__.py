"""Maximal clique enumeration, maximum clique search and differential comparison."""

import json

from ._cliquearch import (
    DatasetError,
    DisagreementError,
    Graph,
    GraphError,
    GuardError,
    ParseError,
    UsageError,
    algorithm_ids,
    degeneracy,
    generate,
    gnp,
    graph_digest,
    harary_ross,
    load_assyrian,
    max_clique,
    maximal_cliques,
    moon_moser,
    motif_census,
    oracle_maximal_cliques,
    parse_graph,
    random_ktree,
    read_graph,
    render_comparison,
    simplicial_reduction,
    write_graph,
)
from ._cliquearch import compare as _compare
from ._cliquearch import table1 as _table1

__version__ = "0.1.0"


def compare(graph, algorithms, min_size=1):
    """Differential comparison as a dict (the CLI's ``diff --json`` document)."""
    return json.loads(_compare(graph, list(algorithms), min_size))


def table1(with_historical=False, min_size=3):
    """Comparison on the bundled Assyrian network as a dict."""
    return json.loads(_table1(with_historical, min_size))
