#pragma once

#include <stdexcept>
#include <string>

namespace fuzzdp {

// Base of every error the library raises. CLI exit codes are derived from
// the subclass: validation problems map to 2, numeric non-convergence to 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class NestednessViolation : public ValidationError {
public:
    NestednessViolation(double alpha_lo, double alpha_hi);
    double alpha_lo() const noexcept { return alpha_lo_; }
    double alpha_hi() const noexcept { return alpha_hi_; }

private:
    double alpha_lo_;
    double alpha_hi_;
};

class EmptyTopCut : public ValidationError {
public:
    EmptyTopCut() : ValidationError("cut at level 1 is empty") {}
};

class DimMismatch : public ValidationError {
public:
    DimMismatch(int a, int b);
};

class UnboundedSupport : public ValidationError {
public:
    explicit UnboundedSupport(const std::string& what)
        : ValidationError("unbounded support: " + what) {}
};

class PointCloudUnsupported : public ValidationError {
public:
    PointCloudUnsupported()
        : ValidationError("star-shapedness is undefined for a bare point cloud") {}
};

class EmptyKernel : public ValidationError {
public:
    EmptyKernel() : ValidationError("kernel is empty: set is not star-shaped") {}
};

class NumericError : public Error {
public:
    using Error::Error;
};

class NonConvergentLevel : public NumericError {
public:
    explicit NonConvergentLevel(double alpha);
    double alpha() const noexcept { return alpha_; }

private:
    double alpha_;
};

}  // namespace fuzzdp
