"""Binomial partial Steiner triple systems.

Constructions of the classical configuration families, enumeration of the
complete graphs freely contained in a configuration, the extension and
line-swap transforms realising every admissible subgraph count, canonical
forms for isomorphism testing, and an executable verification suite.
"""

from .analysis import (
    FreeSubgraph,
    IntersectionStructure,
    StructureReport,
    complement,
    decompose,
    enumerate_free_complete,
    intersection_structure,
    is_freely_contained,
    naive_enumerate_free_complete,
    structure_report,
)
from .constructions import (
    Labelling,
    PerspectiveData,
    attach_complete,
    grassmannian,
    labelling_from_sequence,
    perspective_system,
    random_perspective_data,
    two_graph_example,
    veronesian,
)
from .core import (
    CollinearityGraph,
    ConfigParams,
    Configuration,
    binomial_index,
    collinearity_graph,
    is_regular_subconfiguration,
    parameters,
    validate_configuration,
)
from .fileio import emit_config, parse_config
from .isomorphism import CanonicalForm, are_isomorphic, canonical_form
from .transforms import (
    SwapCertificate,
    extend_one_more,
    find_swap_candidates,
    swap_kill,
)
from .verify import (
    BatteryReport,
    CensusReport,
    CorpusEntry,
    ExistenceWitness,
    build_existence_corpus,
    classify_veblen_labellings,
    run_property_battery,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
