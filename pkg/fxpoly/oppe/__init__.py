# Trace of secure operations
from ._trace import OpKind, TraceRecord, OpTrace

# Arithmetic backends and mock sharing
from ._backend import Backend, PlainBackend
from ._sharing import ShareTriple, SharingBackend, share, reconstruct

# Simulated ciphertexts
from ._cipher import SimContext, SimCipher

# Oblivious piecewise polynomial evaluation
from ._oppe import calculate_kx, piece_mask, oppe_eval, oppe_eval_batch, finalize_plan, trace_of, load_plan, \
    expected_counts
from ._graph import render_trace_graph
