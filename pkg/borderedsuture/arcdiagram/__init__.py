from borderedsuture.arcdiagram.diagram import (
    ARC,
    PMC,
    ArcDiagram,
    Chord,
    as_arc_diagram,
    chords,
    disjoint_union,
    drop_pointless,
    dump,
    empty_diagram,
    ensure_valid_diagram,
    is_valid,
    linear_order,
    load,
    nondegeneracy_trace,
    pointless_intervals,
    reverse,
    support,
    validate,
    zb_diagram,
)
from borderedsuture.arcdiagram.embed import (
    Embedding,
    SubdiagramKind,
    embed_into_pmc,
    embedding,
    subdiagram_embed,
)

__all__ = [
    "ARC",
    "PMC",
    "ArcDiagram",
    "Chord",
    "Embedding",
    "SubdiagramKind",
    "as_arc_diagram",
    "chords",
    "disjoint_union",
    "drop_pointless",
    "dump",
    "embed_into_pmc",
    "embedding",
    "empty_diagram",
    "ensure_valid_diagram",
    "is_valid",
    "linear_order",
    "load",
    "nondegeneracy_trace",
    "pointless_intervals",
    "reverse",
    "subdiagram_embed",
    "support",
    "validate",
    "zb_diagram",
]
