#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "pinlab/combinat.hpp"
#include "pinlab/linalg.hpp"

namespace pinlab {

enum class Statistics { Fermion, Qubit, BosonProduct, HardCoreBoson };

std::string to_string(Statistics s);
Statistics statistics_from_string(const std::string& s);

// Sparse pure state over the canonical basis labels of its statistics.
// States need not be normalized; operations that require it normalize
// internally.  Exact zeros are pruned, nothing else (support detection has
// its own thresholds elsewhere).
struct PureState {
  int d = 0;          // one-particle dimension (2 for qubits)
  int particles = 0;  // N; subsystem count r for qubit statistics
  Statistics statistics = Statistics::Fermion;
  std::map<Config, Cplx> amplitudes;

  void insert(const Config& label, Cplx a);
  Cplx amplitude(const Config& label) const;
  void validate() const;  // throws std::domain_error on malformed labels
};

// Canonical ordered basis labels for the given statistics.
std::vector<Config> state_basis(int d, int particles, Statistics s);

// i.i.d. complex standard normal amplitudes over the full basis, normalized.
PureState random_state(int d, int particles, Statistics s, std::uint64_t seed);

// (sum_{j,l} h_jl f^dag_j f_l) |psi>.  The matrix element between |c> and
// |c'> = |(c \ {l}) u {j}> carries sign (-1)^(number of occupied orbitals
// strictly between j and l in c); hard-core bosons use sign +1.  h need not
// be Hermitian (matrix units are valid inputs).  For qubit statistics h is
// 2x2 and acts on the given subsystem (1-based).
PureState apply_one_body(const Mat& h, const PureState& psi, int subsystem = 1);

// u^{x N} |psi> expanded in the canonical basis: fermions pick up minor
// determinants det(u[c', c]), hard-core bosons the single-occupancy projected
// permanents, qubits apply u on one subsystem.
PureState change_basis(const PureState& psi, const Mat& u, int subsystem = 1);

Cplx inner(const PureState& a, const PureState& b);
double norm(const PureState& a);
PureState normalize(const PureState& a);

// Dense amplitude vector in canonical basis order (and back).
Vec to_dense(const PureState& psi);
PureState from_dense(const Vec& v, int d, int particles, Statistics s);

}  // namespace pinlab
