#ifndef MATASYM_ERRORS_HPP
#define MATASYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace matasym {

// Failure modes of the numerical preconditions. Each maps to one name that
// the CLI prints on stderr before exiting with code 2.
enum class ErrorCode {
  near_defective,     // eigenvector matrix condition exceeds the 1e8 gate
  branch_cut,         // an eigenvalue lies on the closed negative real axis
  not_sectorial,      // spectrum/Hermitian-part condition for Laplace transforms fails
  singular_resolvent, // a sampled shift coincides with an eigenvalue
  insufficient_series,// fewer series coefficients supplied than terms requested
  oracle_failure,     // a reference evaluator failed or returned garbage
  spectrum_not_right, // an eigenvalue has nonpositive real part where Re > 0 is required
  not_convergent,     // an integral fails its convergence precondition or panel budget
  singular_shift,     // A + kI singular along the reciprocal-gamma shift
  mu_too_small,       // Hermitian-part minimum below the Bessel threshold -1/2
  sector_violation,   // matrix or scalar argument outside the admissible sector
  no_convergence,     // series did not converge within the term budget
  contour_pole,       // Mellin-Barnes contour hits or crosses a gamma pole
  no_decay,           // Mellin-Barnes integrand has no decay margin (sector margin <= 0)
  not_hermitian_pd,   // Hermitian positive definite input required
  generation_failed,  // matrix family generator exhausted its retry budget
  hypothesis_violated,// sampled check of an integrand hypothesis failed
  invalid_argument,   // malformed sizes, ranges or parameters
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what_arg)
      : std::runtime_error(std::string(error_name(code)) + ": " + what_arg),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  const char* name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace matasym

#endif  // MATASYM_ERRORS_HPP
