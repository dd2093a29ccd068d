#pragma once

#include <stdexcept>
#include <string>

namespace qchab {

enum class Errc {
  non_unit,
  ring_mismatch,
  cap_mismatch,
  composition_divergence,
  basis_rank_mismatch,
  indeterminate_tail,
  uncertified_tail,
  zero_residue,
  non_integrable_differential,
  integrality_unverified,
  base_mismatch,
  non_principal_symbolic_fiber,
  arity_mismatch,
  schema_error,
  invariant_violation,
  internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::non_unit: return "NonUnit";
    case Errc::ring_mismatch: return "RingMismatch";
    case Errc::cap_mismatch: return "CapMismatch";
    case Errc::composition_divergence: return "CompositionDivergence";
    case Errc::basis_rank_mismatch: return "BasisRankMismatch";
    case Errc::indeterminate_tail: return "IndeterminateTail";
    case Errc::uncertified_tail: return "UncertifiedTail";
    case Errc::zero_residue: return "ZeroResidue";
    case Errc::non_integrable_differential: return "NonIntegrableDifferential";
    case Errc::integrality_unverified: return "IntegralityUnverified";
    case Errc::base_mismatch: return "BaseMismatch";
    case Errc::non_principal_symbolic_fiber: return "NonPrincipalSymbolicFiber";
    case Errc::arity_mismatch: return "ArityMismatch";
    case Errc::schema_error: return "SchemaError";
    case Errc::invariant_violation: return "InvariantViolation";
    case Errc::internal: return "InternalError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace qchab
