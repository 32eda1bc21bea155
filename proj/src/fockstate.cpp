#include "pinlab/fockstate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pinlab/errors.hpp"

namespace pinlab {

std::string to_string(Statistics s) {
  switch (s) {
    case Statistics::Fermion: return "fermion";
    case Statistics::Qubit: return "qubit";
    case Statistics::BosonProduct: return "boson-product";
    case Statistics::HardCoreBoson: return "hcb";
  }
  return "?";
}

Statistics statistics_from_string(const std::string& s) {
  if (s == "fermion") return Statistics::Fermion;
  if (s == "qubit") return Statistics::Qubit;
  if (s == "boson-product") return Statistics::BosonProduct;
  if (s == "hcb") return Statistics::HardCoreBoson;
  throw std::domain_error("unknown statistics: '" + s + "'");
}

void PureState::insert(const Config& label, Cplx a) {
  if (a == Cplx(0.0, 0.0)) return;
  amplitudes[label] += a;
  if (amplitudes[label] == Cplx(0.0, 0.0)) amplitudes.erase(label);
}

Cplx PureState::amplitude(const Config& label) const {
  auto it = amplitudes.find(label);
  return it == amplitudes.end() ? Cplx(0.0, 0.0) : it->second;
}

namespace {

bool valid_label(const Config& c, int d, int particles, Statistics s) {
  switch (s) {
    case Statistics::Fermion:
    case Statistics::HardCoreBoson:
      return valid_configuration(c, d, particles);
    case Statistics::Qubit: {
      if (static_cast<int>(c.size()) != particles) return false;
      for (int x : c)
        if (x != 1 && x != 2) return false;
      return true;
    }
    case Statistics::BosonProduct:
      return c.size() == 1 && c[0] >= 1 && c[0] <= d;
  }
  return false;
}

}  // namespace

void PureState::validate() const {
  if (d <= 0 || particles < 0) throw std::domain_error("PureState: invalid dimensions");
  if (statistics == Statistics::Fermion || statistics == Statistics::HardCoreBoson) {
    if (particles > d) throw std::domain_error("PureState: N > d");
  }
  if (statistics == Statistics::Qubit && d != 2) {
    throw std::domain_error("PureState: qubit statistics requires d = 2");
  }
  for (const auto& [label, a] : amplitudes) {
    (void)a;
    if (!valid_label(label, d, particles, statistics)) {
      throw std::domain_error("PureState: label invalid for declared statistics");
    }
  }
}

std::vector<Config> state_basis(int d, int particles, Statistics s) {
  switch (s) {
    case Statistics::Fermion:
    case Statistics::HardCoreBoson:
      return enumerate_configurations(d, particles);
    case Statistics::Qubit: {
      std::vector<Config> out;
      Config t(particles, 1);
      while (true) {
        out.push_back(t);
        int i = particles - 1;
        while (i >= 0 && t[i] == 2) t[i--] = 1;
        if (i < 0) break;
        t[i] = 2;
      }
      return out;
    }
    case Statistics::BosonProduct: {
      std::vector<Config> out;
      for (int j = 1; j <= d; ++j) out.push_back({j});
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

PureState random_state(int d, int particles, Statistics s, std::uint64_t seed) {
  PureState psi;
  psi.d = d;
  psi.particles = particles;
  psi.statistics = s;
  psi.validate();
  Rng rng(seed);
  for (const Config& c : state_basis(d, particles, s)) {
    psi.amplitudes[c] = rng.cgauss();
  }
  return normalize(psi);
}

namespace {

int count_strictly_between(const Config& c, int a, int b) {
  const int lo = std::min(a, b);
  const int hi = std::max(a, b);
  int cnt = 0;
  for (int x : c) {
    if (x > lo && x < hi) ++cnt;
  }
  return cnt;
}

// c with l removed and j inserted, kept sorted.  j must not occur in c.
Config replace_orbital(const Config& c, int l, int j) {
  Config out;
  out.reserve(c.size());
  for (int x : c)
    if (x != l) out.push_back(x);
  out.insert(std::upper_bound(out.begin(), out.end(), j), j);
  return out;
}

PureState apply_one_body_occupation(const Mat& h, const PureState& psi, bool fermionic_signs) {
  PureState out;
  out.d = psi.d;
  out.particles = psi.particles;
  out.statistics = psi.statistics;
  for (const auto& [c, a] : psi.amplitudes) {
    for (int l : c) {
      for (int j = 1; j <= psi.d; ++j) {
        const Cplx hjl = h(j - 1, l - 1);
        if (hjl == Cplx(0.0, 0.0)) continue;
        if (j == l) {
          out.insert(c, hjl * a);
        } else if (!std::binary_search(c.begin(), c.end(), j)) {
          const Config c2 = replace_orbital(c, l, j);
          double sign = 1.0;
          if (fermionic_signs && (count_strictly_between(c, j, l) % 2 != 0)) sign = -1.0;
          out.insert(c2, sign * hjl * a);
        }
      }
    }
  }
  return out;
}

PureState apply_local_qubit(const Mat& h, const PureState& psi, int subsystem) {
  if (subsystem < 1 || subsystem > psi.particles) {
    throw std::domain_error("apply_one_body: subsystem out of range");
  }
  PureState out;
  out.d = psi.d;
  out.particles = psi.particles;
  out.statistics = psi.statistics;
  for (const auto& [t, a] : psi.amplitudes) {
    const int cur = t[subsystem - 1];
    for (int m = 1; m <= 2; ++m) {
      const Cplx hm = h(m - 1, cur - 1);
      if (hm == Cplx(0.0, 0.0)) continue;
      Config t2 = t;
      t2[subsystem - 1] = m;
      out.insert(t2, hm * a);
    }
  }
  return out;
}

}  // namespace

PureState apply_one_body(const Mat& h, const PureState& psi, int subsystem) {
  switch (psi.statistics) {
    case Statistics::Fermion:
      if (h.rows() != psi.d || h.cols() != psi.d)
        throw std::domain_error("apply_one_body: matrix dimension mismatch");
      return apply_one_body_occupation(h, psi, /*fermionic_signs=*/true);
    case Statistics::HardCoreBoson:
      if (h.rows() != psi.d || h.cols() != psi.d)
        throw std::domain_error("apply_one_body: matrix dimension mismatch");
      return apply_one_body_occupation(h, psi, /*fermionic_signs=*/false);
    case Statistics::Qubit:
      if (h.rows() != 2 || h.cols() != 2)
        throw std::domain_error("apply_one_body: qubit operator must be 2x2");
      return apply_local_qubit(h, psi, subsystem);
    case Statistics::BosonProduct:
      throw UnsupportedOperation("apply_one_body: not defined for boson-product states");
  }
  throw std::logic_error("unreachable");
}

namespace {

Cplx minor_determinant(const Mat& u, const Config& rows, const Config& cols) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) return Cplx(1.0, 0.0);
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = u(rows[i] - 1, cols[j] - 1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return Eigen::PartialPivLU<Mat>(m).determinant();
}

Cplx minor_permanent(const Mat& u, const Config& rows, const Config& cols) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) return Cplx(1.0, 0.0);
  // expansion along the first row; fine at these sizes
  std::vector<int> free_cols(cols.begin(), cols.end());
  struct Rec {
    const Mat& u;
    const Config& rows;
    Cplx run(std::vector<int>& free_cols, int row) {
      if (row == static_cast<int>(rows.size())) return Cplx(1.0, 0.0);
      Cplx acc(0.0, 0.0);
      for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const int col = free_cols[k];
        const Cplx v = u(rows[row] - 1, col - 1);
        if (v == Cplx(0.0, 0.0)) continue;
        free_cols.erase(free_cols.begin() + static_cast<long>(k));
        acc += v * run(free_cols, row + 1);
        free_cols.insert(free_cols.begin() + static_cast<long>(k), col);
      }
      return acc;
    }
  } rec{u, rows};
  return rec.run(free_cols, 0);
}

}  // namespace

PureState change_basis(const PureState& psi, const Mat& u, int subsystem) {
  if (psi.statistics == Statistics::BosonProduct) {
    throw UnsupportedOperation("change_basis: not defined for boson-product states");
  }
  if (psi.statistics == Statistics::Qubit) {
    if (!is_unitary(u, 1e-10)) throw std::domain_error("change_basis: u not unitary");
    return apply_local_qubit(u, psi, subsystem);
  }
  if (u.rows() != psi.d || u.cols() != psi.d || !is_unitary(u, 1e-10)) {
    throw std::domain_error("change_basis: u not unitary of matching dimension");
  }
  PureState out;
  out.d = psi.d;
  out.particles = psi.particles;
  out.statistics = psi.statistics;
  const bool fermion = psi.statistics == Statistics::Fermion;
  for (const Config& cp : enumerate_configurations(psi.d, psi.particles)) {
    Cplx acc(0.0, 0.0);
    for (const auto& [c, a] : psi.amplitudes) {
      const Cplx w = fermion ? minor_determinant(u, cp, c) : minor_permanent(u, cp, c);
      acc += w * a;
    }
    if (std::abs(acc) > 0.0) out.amplitudes[cp] = acc;
  }
  return out;
}

Cplx inner(const PureState& a, const PureState& b) {
  if (a.d != b.d || a.particles != b.particles || a.statistics != b.statistics) {
    throw std::domain_error("inner: mismatched state spaces");
  }
  Cplx acc(0.0, 0.0);
  const auto& small = a.amplitudes.size() <= b.amplitudes.size() ? a : b;
  const auto& large = a.amplitudes.size() <= b.amplitudes.size() ? b : a;
  const bool small_is_a = &small == &a;
  for (const auto& [c, x] : small.amplitudes) {
    auto it = large.amplitudes.find(c);
    if (it == large.amplitudes.end()) continue;
    acc += small_is_a ? std::conj(x) * it->second : std::conj(it->second) * x;
  }
  return acc;
}

double norm(const PureState& a) {
  double s = 0.0;
  for (const auto& [c, x] : a.amplitudes) {
    (void)c;
    s += std::norm(x);
  }
  return std::sqrt(s);
}

PureState normalize(const PureState& a) {
  const double n = norm(a);
  if (n <= 0.0) throw std::domain_error("normalize: zero state");
  PureState out = a;
  for (auto& [c, x] : out.amplitudes) {
    (void)c;
    x /= n;
  }
  return out;
}

Vec to_dense(const PureState& psi) {
  const auto basis = state_basis(psi.d, psi.particles, psi.statistics);
  Vec v = Vec::Zero(static_cast<long>(basis.size()));
  long i = 0;
  for (const Config& c : basis) v(i++) = psi.amplitude(c);
  return v;
}

PureState from_dense(const Vec& v, int d, int particles, Statistics s) {
  const auto basis = state_basis(d, particles, s);
  if (static_cast<long>(basis.size()) != v.size()) {
    throw std::domain_error("from_dense: dimension mismatch");
  }
  PureState psi;
  psi.d = d;
  psi.particles = particles;
  psi.statistics = s;
  for (long i = 0; i < v.size(); ++i) {
    if (v(i) != Cplx(0.0, 0.0)) psi.amplitudes[basis[static_cast<std::size_t>(i)]] = v(i);
  }
  return psi;
}

}  // namespace pinlab
