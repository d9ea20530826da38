#pragma once

#include <complex>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace svdpath {

using Index = Eigen::Index;

template <class Scalar>
using ComplexMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using ComplexVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

template <class Scalar>
using RealMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using RealVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// An argument violates an operation's contract: bad dimensions, non-finite
/// entries, out-of-range indices, malformed parameters.
struct InvalidInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A stated precondition was violated (e.g. asking for the singular-value gap
/// of a non-canonical triplet, or exceeding the column-swap bound).
struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Degenerate numerical situation: repeated singular values under a fail-fast
/// policy, a path with no usable reference left, a constant series handed to a
/// covariance estimator.
struct DegeneracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Default relative tolerance for unitarity and reconstruction checks.
inline constexpr double kFactorTolerance = 1e-10;

/// One factorization H = U * S * V^H with unitary U (M x M) and V (N x N).
/// S is M x N and nonzero only on the main diagonal. `canonical` marks the
/// strict identification conditions: diag(S) real, non-negative,
/// non-increasing. Relaxed triplets carry complex diagonal entries whose
/// magnitudes still equal the strict singular values.
template <class Scalar = double>
struct SvdTriplet {
  ComplexMatrix<Scalar> U;
  ComplexMatrix<Scalar> S;
  ComplexMatrix<Scalar> V;
  bool canonical = false;

  Index rows() const { return S.rows(); }
  Index cols() const { return S.cols(); }

  /// Number of singular values, min(M, N).
  Index order() const { return std::min(S.rows(), S.cols()); }

  ComplexVector<Scalar> diagonal() const { return S.diagonal(); }
};

/// Ordered sequence of complex M x N samples taken from a matrix random
/// process at a fixed interval. All samples share the same shape.
template <class Scalar = double>
struct MatrixSamplePath {
  std::vector<ComplexMatrix<Scalar>> samples;
  Scalar sampleIntervalS{1};
  std::map<std::string, std::string> meta;  // provenance: generator, seed, ...

  Index size() const { return static_cast<Index>(samples.size()); }
  Index rows() const { return samples.empty() ? 0 : samples.front().rows(); }
  Index cols() const { return samples.empty() ? 0 : samples.front().cols(); }
};

template <class Scalar>
void validate(const MatrixSamplePath<Scalar>& path) {
  if (path.samples.empty())
    throw InvalidInputError("sample path: must contain at least one sample");
  if (!(path.sampleIntervalS > Scalar(0)))
    throw InvalidInputError("sample path: sample interval must be positive");
  const Index m = path.rows();
  const Index n = path.cols();
  if (m < 1 || n < 1)
    throw InvalidInputError("sample path: samples must be at least 1x1");
  for (const auto& h : path.samples) {
    if (h.rows() != m || h.cols() != n)
      throw InvalidInputError("sample path: samples differ in shape");
  }
}

/// || A^H A - I ||_F / || I ||_F.
template <class Scalar>
Scalar unitarity_error(const ComplexMatrix<Scalar>& a) {
  const Index n = a.cols();
  ComplexMatrix<Scalar> g = a.adjoint() * a;
  g.diagonal().array() -= std::complex<Scalar>(1);
  return g.norm() / std::sqrt(Scalar(n));
}

/// Relative Frobenius distance between U * S * V^H and h. Falls back to the
/// absolute norm when h is the zero matrix.
template <class Scalar>
Scalar reconstruction_error(const SvdTriplet<Scalar>& t, const ComplexMatrix<Scalar>& h) {
  const Scalar ref = h.norm();
  const Scalar err = (t.U * t.S * t.V.adjoint() - h).norm();
  return ref > Scalar(0) ? err / ref : err;
}

}  // namespace svdpath
