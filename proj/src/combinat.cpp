#include "pinlab/combinat.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pinlab {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

bool valid_configuration(const Config& c, int d, int N) {
  if (static_cast<int>(c.size()) != N) return false;
  int prev = 0;
  for (int x : c) {
    if (x <= prev || x > d) return false;
    prev = x;
  }
  return true;
}

std::vector<Config> enumerate_configurations(int d, int N) {
  if (d <= 0 || N < 0 || N > d) {
    throw std::domain_error("enumerate_configurations: need 0 <= N <= d, d > 0, got d=" +
                            std::to_string(d) + " N=" + std::to_string(N));
  }
  std::vector<Config> out;
  out.reserve(static_cast<std::size_t>(binomial(d, N)));
  Config c(N);
  for (int i = 0; i < N; ++i) c[i] = i + 1;
  while (true) {
    out.push_back(c);
    // next lexicographic N-subset of 1..d
    int i = N - 1;
    while (i >= 0 && c[i] == d - (N - 1 - i)) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < N; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

long long config_index(const Config& c, int d) {
  const int N = static_cast<int>(c.size());
  if (!valid_configuration(c, d, N)) {
    throw std::domain_error("config_index: invalid configuration");
  }
  // count subsets preceding c in lexicographic order
  long long idx = 0;
  int prev = 0;
  for (int i = 0; i < N; ++i) {
    for (int v = prev + 1; v < c[i]; ++v) {
      idx += binomial(d - v, N - 1 - i);
    }
    prev = c[i];
  }
  return idx;
}

std::vector<int> occupation_vector(const Config& c, int d) {
  if (!valid_configuration(c, d, static_cast<int>(c.size()))) {
    throw std::domain_error("occupation_vector: invalid configuration");
  }
  std::vector<int> n(d, 0);
  for (int x : c) n[x - 1] = 1;
  return n;
}

std::vector<std::vector<int>> hypercube_vertices(int d, int N) {
  std::vector<std::vector<int>> out;
  for (const Config& c : enumerate_configurations(d, N)) {
    out.push_back(occupation_vector(c, d));
  }
  return out;
}

std::vector<int> degeneracy_generators(const std::vector<double>& n_descending, double eps_deg) {
  const int d = static_cast<int>(n_descending.size());
  std::vector<int> gens;
  for (int j = 0; j + 1 < d; ++j) {
    const double gap = n_descending[j] - n_descending[j + 1];
    if (gap < -eps_deg) {
      throw std::domain_error("degeneracy_generators: input not descending at position " +
                              std::to_string(j + 1));
    }
    if (std::abs(gap) <= eps_deg) gens.push_back(j + 1);
  }
  return gens;
}

}  // namespace pinlab
