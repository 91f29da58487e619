from cathedral.io.documents import (
    GraftClasses,
    GraftDocument,
    document_from_graft,
    dump_document,
    load_graft_file,
    parse_graft_file,
    relabel_document,
    save_graft_file,
    spec_from_documents,
)
from cathedral.io.emit import (
    certificate_to_dict,
    decomposition_to_dict,
    emit_certificate,
    emit_decomposition,
    emit_dot,
    emit_json,
)
from cathedral.io.generators import (
    enumerate_small_grafts,
    gen_random_comb,
    gen_random_graft,
    gen_random_primal_tooth,
    gen_random_synthesis_spec,
    max_edges,
    random_instance,
)

__all__ = [
    "GraftClasses",
    "GraftDocument",
    "certificate_to_dict",
    "decomposition_to_dict",
    "document_from_graft",
    "dump_document",
    "emit_certificate",
    "emit_decomposition",
    "emit_dot",
    "emit_json",
    "enumerate_small_grafts",
    "gen_random_comb",
    "gen_random_graft",
    "gen_random_primal_tooth",
    "gen_random_synthesis_spec",
    "load_graft_file",
    "max_edges",
    "parse_graft_file",
    "random_instance",
    "relabel_document",
    "save_graft_file",
    "spec_from_documents",
]
