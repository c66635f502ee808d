"""k-bit delay decodable code-tuples, reduced code-tuples and the Phi_k
subset symmetry they rest on."""

from .codec import Decoder, Encoder, decode, encode, flush
from .codetuple import (CodeTuple, average_length, core_restrict,
                        decode_codetuple, encode_codetuple, f_star,
                        is_extendable, is_k_dec, is_regular, markov_analyze,
                        minimal_closed_sets, potentials, pref_bar, pref_sets,
                        source_dist, tau_star, uniform)
from .errors import (CorruptInputError, DelayCodeError, DomainError,
                     FlushError, FormatError, InternalError, InvalidCodeError,
                     InvalidRctError, NotRegularError, ResourceError)
from .orbit import (canonicalize, count_classes, count_classes_restricted,
                    enumerate_classes, equivalent, transport)
from .phi import PhiMap, apply, compose, identity, invert, quotient
from .rct import (ExpandedIndex, Rct, direct_realization, expand_index_step,
                  expand_minimal, length_invariance_check, pref_bar_rct,
                  pref_set_rct, validate)
from .reduce import merge_equivalent_step, relabel_by_prefsets, to_rct
from .search import huffman_length, micro_search

__version__ = "0.1.0"
