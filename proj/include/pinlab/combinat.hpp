#pragma once

#include <cstdint>
#include <vector>

namespace pinlab {

// Degeneracy tolerance on adjacent occupation numbers.
inline constexpr double kDegeneracyTol = 1e-8;

// Orbital label tuple.  For fermions and hard-core bosons this is a strictly
// increasing N-subset of 1..d; for qubit states a length-r tuple over {1,2};
// for product bosons a single orbital index.
using Config = std::vector<int>;

long long binomial(int n, int k);

bool valid_configuration(const Config& c, int d, int N);

// All C(d,N) configurations in lexicographic order.  This order is the
// canonical basis index used by every amplitude vector in the library.
std::vector<Config> enumerate_configurations(int d, int N);

// Position of c in enumerate_configurations(d, |c|).
long long config_index(const Config& c, int d);

// 0/1 vector with entry j-1 equal to 1 iff orbital j is in c.
std::vector<int> occupation_vector(const Config& c, int d);

// All 0/1 vectors of length d summing to N, ordered like the configurations.
std::vector<std::vector<int>> hypercube_vertices(int d, int N);

// Indices j (1-based, j <= d-1) with |n_j - n_{j+1}| <= eps_deg; these are
// the adjacent transpositions generating the permutations fixing n.
// Input must be descending within eps_deg.
std::vector<int> degeneracy_generators(const std::vector<double>& n_descending, double eps_deg);

}  // namespace pinlab
