#include "rootcast/errors.hpp"

namespace rootcast {

const char* errc_name(errc c) {
  switch (c) {
    case errc::self_loop: return "SelfLoop";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::cyclic: return "Cyclic";
    case errc::disconnected: return "Disconnected";
    case errc::not_an_edge: return "NotAnEdge";
    case errc::vertex_out_of_range: return "VertexOutOfRange";
    case errc::entry_out_of_range: return "EntryOutOfRange";
    case errc::too_large: return "TooLarge";
    case errc::alpha_out_of_range: return "AlphaOutOfRange";
    case errc::no_convergence: return "NoConvergence";
    case errc::single_vertex: return "SingleVertex";
    case errc::not_symmetric: return "NotSymmetric";
    case errc::carrier_violation: return "CarrierViolation";
    case errc::params_out_of_region: return "ParamsOutOfRegion";
    case errc::not_a_root: return "NotARoot";
    case errc::unknown_name: return "UnknownName";
    case errc::bad_input: return "BadInput";
  }
  return "UnknownError";
}

}  // namespace rootcast
