#pragma once

#include <utility>
#include <vector>

#include "pinlab/fockstate.hpp"

namespace pinlab {

// Relative amplitude threshold separating genuine zeros from round-off.
inline constexpr double kSupportThreshold = 1e-10;

// One-body reduced density operator together with its natural decomposition.
// nons are descending; nos columns are the natural orbitals, fixed by the
// deterministic degenerate-cluster convention of natural_decomposition.
struct OneBodyDensity {
  Mat matrix;
  RVec nons;
  Mat nos;
  double eps_deg = kDegeneracyTol;
};

struct SupportSet {
  std::vector<Config> configs;  // lexicographic
  double threshold = kSupportThreshold;
  bool contains(const Config& c) const;
};

struct TangentImage {
  std::vector<Mat> basis;  // Hermitian, trace-orthonormal
};

// A(j,l) = <phi| f^dag_j f_l |psi> for fermion/hcb states.
Mat transition_matrix(const PureState& phi, const PureState& psi);

// rho_1 = N Tr_{N-1}[|psi><psi|] for normalized psi (normalizes internally).
// For qubit statistics returns the marginal of the given subsystem.
OneBodyDensity one_body_rdm(const PureState& psi, double eps_deg = kDegeneracyTol,
                            int subsystem = 1);

// Descending eigenvalues; within each degenerate cluster the eigenbasis is
// fixed by re-diagonalizing the projected probe diag(1..d), then each
// eigenvector phase is fixed on its largest-magnitude component.  Supports
// within degenerate clusters depend on this convention.
void natural_decomposition(const Mat& rho, double eps_deg, RVec& nons, Mat& nos);

// change_basis(psi, nos^dag) and the recomputed (diagonal) density.  Throws
// InternalConsistencyError if the rotated density is not diagonal to 1e-8.
std::pair<PureState, OneBodyDensity> to_natural_basis(const PureState& psi,
                                                      double eps_deg = kDegeneracyTol);

// Configurations with |amplitude| > threshold * norm(psi).  psi must already
// be expressed in its natural orbital basis.
SupportSet support(const PureState& psi_no_basis, double threshold = kSupportThreshold);

// Trace-orthonormal basis of the image of the derivative of the (normalized)
// state -> density map at psi, from the doubled configuration basis (Phi and
// i Phi) with the component along rho_1 itself projected out.
TangentImage dmu_image(const PureState& psi);

}  // namespace pinlab
