#pragma once

#include <stdexcept>
#include <string>

namespace rootcast {

// Every failure mode the library reports deliberately.  CLI maps these to
// exit code 2 (bad input / bad request); property failures are not errors.
enum class errc {
  self_loop,
  duplicate_edge,
  cyclic,
  disconnected,
  not_an_edge,
  vertex_out_of_range,
  entry_out_of_range,
  too_large,
  alpha_out_of_range,
  no_convergence,
  single_vertex,
  not_symmetric,
  carrier_violation,
  params_out_of_region,
  not_a_root,
  unknown_name,
  bad_input,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

// Cheap always-on internal consistency check (algorithm invariants).
inline void check_internal(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("internal invariant violated: ") + what);
}

}  // namespace rootcast
