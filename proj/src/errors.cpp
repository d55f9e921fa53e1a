#include "fuzzdp/errors.hpp"

#include "fuzzdp/format.hpp"

namespace fuzzdp {

NestednessViolation::NestednessViolation(double alpha_lo, double alpha_hi)
    : ValidationError("cuts are not nested: cut at alpha=" + format_number(alpha_lo) +
                      " does not contain cut at alpha=" + format_number(alpha_hi)),
      alpha_lo_(alpha_lo),
      alpha_hi_(alpha_hi) {}

DimMismatch::DimMismatch(int a, int b)
    : ValidationError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}

NonConvergentLevel::NonConvergentLevel(double alpha)
    : NumericError("per-level cut sequence does not converge at alpha=" + format_number(alpha)),
      alpha_(alpha) {}

}  // namespace fuzzdp
