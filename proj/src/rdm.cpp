#include "pinlab/rdm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pinlab/errors.hpp"

namespace pinlab {

bool SupportSet::contains(const Config& c) const {
  return std::binary_search(configs.begin(), configs.end(), c);
}

Mat transition_matrix(const PureState& phi, const PureState& psi) {
  if (phi.d != psi.d || phi.particles != psi.particles || phi.statistics != psi.statistics) {
    throw std::domain_error("transition_matrix: mismatched state spaces");
  }
  if (psi.statistics != Statistics::Fermion && psi.statistics != Statistics::HardCoreBoson) {
    throw UnsupportedOperation("transition_matrix: occupation-number statistics only");
  }
  const bool fermion = psi.statistics == Statistics::Fermion;
  const int d = psi.d;
  Mat a = Mat::Zero(d, d);
  for (const auto& [c, amp] : psi.amplitudes) {
    for (int l : c) {
      // diagonal j = l
      a(l - 1, l - 1) += std::conj(phi.amplitude(c)) * amp;
      for (int j = 1; j <= d; ++j) {
        if (j == l || std::binary_search(c.begin(), c.end(), j)) continue;
        Config c2;
        c2.reserve(c.size());
        for (int x : c)
          if (x != l) c2.push_back(x);
        c2.insert(std::upper_bound(c2.begin(), c2.end(), j), j);
        const Cplx pa = phi.amplitude(c2);
        if (pa == Cplx(0.0, 0.0)) continue;
        double sign = 1.0;
        if (fermion) {
          const int lo = std::min(j, l), hi = std::max(j, l);
          int between = 0;
          for (int x : c)
            if (x > lo && x < hi) ++between;
          if (between % 2 != 0) sign = -1.0;
        }
        a(j - 1, l - 1) += std::conj(pa) * sign * amp;
      }
    }
  }
  return a;
}

namespace {

Mat qubit_marginal_matrix(const PureState& psi, int subsystem) {
  if (subsystem < 1 || subsystem > psi.particles) {
    throw std::domain_error("one_body_rdm: subsystem out of range");
  }
  Mat rho = Mat::Zero(2, 2);
  for (const auto& [t, a] : psi.amplitudes) {
    for (int m = 1; m <= 2; ++m) {
      Config t2 = t;
      t2[subsystem - 1] = m;
      const Cplx b = psi.amplitude(t2);
      if (b != Cplx(0.0, 0.0)) rho(t[subsystem - 1] - 1, m - 1) += a * std::conj(b);
    }
  }
  return rho;
}

Mat boson_product_matrix(const PureState& psi) {
  const int d = psi.d;
  const int N = psi.particles;
  Mat rho = Mat::Zero(d, d);
  for (const auto& [cj, aj] : psi.amplitudes) {
    for (const auto& [cl, al] : psi.amplitudes) {
      // <l|j>^(N-1) kills cross terms for N >= 2
      if (N >= 2 && cj != cl) continue;
      rho(cj[0] - 1, cl[0] - 1) += static_cast<double>(N) * aj * std::conj(al);
    }
  }
  return rho;
}

}  // namespace

void natural_decomposition(const Mat& rho, double eps_deg, RVec& nons, Mat& nos) {
  const int d = static_cast<int>(rho.rows());
  if (!is_hermitian(rho, 1e-10)) {
    throw std::domain_error("natural_decomposition: matrix not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(rho);
  nons = es.eigenvalues().reverse();
  nos = es.eigenvectors().rowwise().reverse();

  Mat probe = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i) probe(i, i) = static_cast<double>(i + 1);
  for (const auto& [lo, hi] : degeneracy_clusters(nons, eps_deg)) {
    const int k = hi - lo;
    if (k <= 1) continue;
    const Mat block = nos.middleCols(lo, k).adjoint() * probe * nos.middleCols(lo, k);
    Eigen::SelfAdjointEigenSolver<Mat> bs(block);
    nos.middleCols(lo, k) = nos.middleCols(lo, k) * bs.eigenvectors();
  }
  fix_column_phases(nos);
}

OneBodyDensity one_body_rdm(const PureState& psi, double eps_deg, int subsystem) {
  const PureState p = normalize(psi);  // throws on zero state
  OneBodyDensity out;
  out.eps_deg = eps_deg;
  switch (p.statistics) {
    case Statistics::Fermion:
    case Statistics::HardCoreBoson:
      // rho_jl = <f^dag_l f_j> = conj(A_jl)
      out.matrix = transition_matrix(p, p).conjugate();
      break;
    case Statistics::Qubit:
      out.matrix = qubit_marginal_matrix(p, subsystem);
      break;
    case Statistics::BosonProduct:
      out.matrix = boson_product_matrix(p);
      break;
  }
  natural_decomposition(out.matrix, eps_deg, out.nons, out.nos);
  return out;
}

std::pair<PureState, OneBodyDensity> to_natural_basis(const PureState& psi, double eps_deg) {
  if (psi.statistics != Statistics::Fermion && psi.statistics != Statistics::HardCoreBoson) {
    throw UnsupportedOperation("to_natural_basis: occupation-number statistics only");
  }
  const PureState p = normalize(psi);
  const OneBodyDensity obd = one_body_rdm(p, eps_deg);
  PureState rotated = change_basis(p, obd.nos.adjoint());
  OneBodyDensity check = one_body_rdm(rotated, eps_deg);
  if (max_offdiag(check.matrix) > 1e-8) {
    throw InternalConsistencyError("to_natural_basis: rotated density not diagonal, offdiag = " +
                                   std::to_string(max_offdiag(check.matrix)));
  }
  return {std::move(rotated), std::move(check)};
}

SupportSet support(const PureState& psi_no_basis, double threshold) {
  const double scale = norm(psi_no_basis);
  SupportSet s;
  s.threshold = threshold;
  for (const auto& [c, a] : psi_no_basis.amplitudes) {
    if (std::abs(a) > threshold * scale) s.configs.push_back(c);
  }
  std::sort(s.configs.begin(), s.configs.end());
  return s;
}

TangentImage dmu_image(const PureState& psi) {
  if (psi.statistics != Statistics::Fermion) {
    throw UnsupportedOperation("dmu_image: fermionic states only");
  }
  const PureState p = normalize(psi);
  const int d = p.d;
  const Mat rho = transition_matrix(p, p).conjugate();
  const auto basis = state_basis(d, p.particles, Statistics::Fermion);

  std::vector<RVec> rows;
  rows.reserve(2 * basis.size());
  for (const Config& c : basis) {
    for (int im = 0; im < 2; ++im) {
      PureState phi;
      phi.d = d;
      phi.particles = p.particles;
      phi.statistics = Statistics::Fermion;
      phi.amplitudes[c] = im == 0 ? Cplx(1.0, 0.0) : Cplx(0.0, 1.0);
      const Mat a = transition_matrix(phi, p);
      // derivative of the normalized map in direction phi
      Mat m = (a + a.adjoint()).conjugate();
      m -= 2.0 * inner(phi, p).real() * rho;
      rows.push_back(hermitian_to_realvec(m));
    }
  }
  RMat stacked(static_cast<long>(rows.size()), d * d);
  for (std::size_t i = 0; i < rows.size(); ++i) stacked.row(static_cast<long>(i)) = rows[i];

  Eigen::JacobiSVD<RMat> svd(stacked, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  const double cutoff = 1e-9 * std::max(smax, 1.0);
  TangentImage img;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) img.basis.push_back(realvec_to_hermitian(svd.matrixV().col(i), d));
  }
  return img;
}

}  // namespace pinlab
