#ifndef SEQCM_ERRORS_HPP
#define SEQCM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace seqcm {

enum class ErrorKind {
  parse,             // malformed input text or session file
  unknown_variable,
  bad_coefficient,   // coefficient not representable in the field
  ring_mismatch,
  unit_ideal,
  zero_ideal,
  containment,       // subquotient containment violated
  infinite_length,
  not_sop,
  dimension,         // dimension precondition violated
  no_stabilization,  // table window too short, caller should raise n_max
  nonintegral_fit,   // fit produced non-integers: dimension mismatch
  route_unavailable,
  invalid_decomposition,
  retries_exhausted,
  inhomogeneous,
  unsupported,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace seqcm

#endif
