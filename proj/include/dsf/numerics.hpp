#pragma once

#include "dsf/types.hpp"

namespace dsf::numerics {

// Relative eigenvalue floor used when forming inverse square roots of
// near-singular covariances.
inline constexpr double kEigFloorRel = 1e-12;

struct EigResult {
  RVector eigenvalues;   // sorted descending
  CMatrix eigenvectors;  // unitary, columns phase-canonical
};

// Check used by the operations below before trusting a matrix as Hermitian.
bool is_hermitian(const CMatrix& a, double tol = 1e-12);

// Eigendecomposition of a Hermitian matrix, eigenvalues descending and each
// eigenvector rotated so its first significant entry is real non-negative.
// Throws NumericalError on non-finite input or solver failure.
EigResult hermitian_eig(const CMatrix& a);

// V diag(max(lambda, floor))^(-1/2) V^H for a PSD matrix. `floor` is an
// absolute eigenvalue floor; the overload without it uses
// kEigFloorRel * lambda_max. Throws NumericalError("degenerate covariance")
// when every eigenvalue sits below the floor.
CMatrix inv_sqrt_psd(const CMatrix& a, double floor);
CMatrix inv_sqrt_psd(const CMatrix& a);

// Unit eigenvector of the largest eigenvalue, phase-canonical. When the top
// two eigenvalues are within 1e-12 of each other (relative), either vector
// may come back and *tied is set when provided.
CVector principal_eigvec(const CMatrix& a, bool* tied = nullptr);

// Rotate a vector so its first entry with magnitude above `threshold` times
// the vector norm is real non-negative. Shared with the mixing-column
// canonicalization in preprocessing.
CVector canonicalize_phase(const CVector& v, double threshold = 1e-9);

}  // namespace dsf::numerics
