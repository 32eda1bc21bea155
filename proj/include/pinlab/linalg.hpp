#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

#include "pinlab/rng.hpp"

namespace pinlab {

using Cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

bool is_hermitian(const Mat& a, double tol = 1e-12);
bool is_unitary(const Mat& u, double tol = 1e-10);

// largest |a_ij| over i != j
double max_offdiag(const Mat& a);

// Trace-orthonormal basis of the real space of Hermitian d x d matrices:
// E_jj, (E_jl + E_lj)/sqrt(2), i(E_jl - E_lj)/sqrt(2) for j < l.  Size d^2.
std::vector<Mat> hermitian_basis(int d);

// Isometry between Hermitian matrices with the trace inner product and
// R^{d^2} with the Euclidean one (coefficients in hermitian_basis order).
RVec hermitian_to_realvec(const Mat& h);
Mat realvec_to_hermitian(const RVec& v, int d);

// Orthonormal basis of the kernel of m (columns of the result).  The rank
// cutoff is rel_tol * max(largest singular value, sigma_floor); a matrix that
// is zero to within the floor has a full kernel.
RMat nullspace(const RMat& m, double rel_tol = 1e-9, double sigma_floor = 1.0);

// Haar-distributed unitary (QR of a complex Gaussian matrix, phases fixed).
Mat random_unitary(int d, Rng& rng);

// exp(i t h) for Hermitian h, via eigendecomposition.
Mat unitary_exp_ih(const Mat& h, double t);

// [begin, end) index ranges of maximal runs with adjacent gap <= eps_deg in a
// descending vector.
std::vector<std::pair<int, int>> degeneracy_clusters(const RVec& descending, double eps_deg);

// Multiplies each column by a phase making its largest-magnitude entry real
// and positive (first such entry if tied).
void fix_column_phases(Mat& u);

// Unitary that simultaneously diagonalizes a family of pairwise commuting
// Hermitian matrices (recursive eigenspace refinement).  Throws
// NumericalError if the residual off-diagonal mass exceeds tol at the end.
Mat simultaneous_diagonalizer(const std::vector<Mat>& commuting, double tol = 1e-8);

}  // namespace pinlab
