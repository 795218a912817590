#include "matasym/errors.hpp"

namespace matasym {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::near_defective: return "NearDefective";
    case ErrorCode::branch_cut: return "BranchCut";
    case ErrorCode::not_sectorial: return "NotSectorial";
    case ErrorCode::singular_resolvent: return "SingularResolvent";
    case ErrorCode::insufficient_series: return "InsufficientSeries";
    case ErrorCode::oracle_failure: return "OracleFailure";
    case ErrorCode::spectrum_not_right: return "SpectrumNotRight";
    case ErrorCode::not_convergent: return "NotConvergent";
    case ErrorCode::singular_shift: return "SingularShift";
    case ErrorCode::mu_too_small: return "MuTooSmall";
    case ErrorCode::sector_violation: return "SectorViolation";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::contour_pole: return "ContourPole";
    case ErrorCode::no_decay: return "NoDecay";
    case ErrorCode::not_hermitian_pd: return "NotHermitianPD";
    case ErrorCode::generation_failed: return "GenerationFailed";
    case ErrorCode::hypothesis_violated: return "HypothesisViolated";
    case ErrorCode::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace matasym
