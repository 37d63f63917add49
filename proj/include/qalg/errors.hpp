#pragma once

#include <stdexcept>
#include <string>

namespace qalg {

enum class Errc {
  invalid_argument,
  not_square_free,
  out_of_range,
  mixed_rings,
  not_real_field,
  perfect_square,
  not_a_unit,
  not_integral,
  not_division_regime,
  wrong_regime,
  norm_minus_one_seed,
  two_d_not_square_free,
  no_solution,
  no_decomposition,
  wrong_family,
  not_in_table,
};

/** Stable identifier for an error code, e.g. "NotSquareFree". */
inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::not_square_free: return "NotSquareFree";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::mixed_rings: return "MixedRings";
    case Errc::not_real_field: return "NotRealField";
    case Errc::perfect_square: return "PerfectSquare";
    case Errc::not_a_unit: return "NotAUnit";
    case Errc::not_integral: return "NotIntegral";
    case Errc::not_division_regime: return "NotDivisionRegime";
    case Errc::wrong_regime: return "WrongRegime";
    case Errc::norm_minus_one_seed: return "NormMinusOneSeed";
    case Errc::two_d_not_square_free: return "TwoDNotSquareFree";
    case Errc::no_solution: return "NoSolution";
    case Errc::no_decomposition: return "NoDecomposition";
    case Errc::wrong_family: return "WrongFamily";
    case Errc::not_in_table: return "NotInTable";
  }
  return "Unknown";
}

/** Exception carrying a structured error code plus a human-readable message. */
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace qalg
