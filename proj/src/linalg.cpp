#include "pinlab/linalg.hpp"

#include <cmath>

#include "pinlab/errors.hpp"

namespace pinlab {

bool is_hermitian(const Mat& a, double tol) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Mat& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const Mat res = u.adjoint() * u - Mat::Identity(u.rows(), u.cols());
  return res.cwiseAbs().maxCoeff() <= tol;
}

double max_offdiag(const Mat& a) {
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

std::vector<Mat> hermitian_basis(int d) {
  std::vector<Mat> basis;
  basis.reserve(static_cast<std::size_t>(d) * d);
  for (int j = 0; j < d; ++j) {
    Mat e = Mat::Zero(d, d);
    e(j, j) = 1.0;
    basis.push_back(e);
  }
  const double s = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < d; ++j) {
    for (int l = j + 1; l < d; ++l) {
      Mat re = Mat::Zero(d, d);
      re(j, l) = s;
      re(l, j) = s;
      basis.push_back(re);
      Mat im = Mat::Zero(d, d);
      im(j, l) = Cplx(0.0, s);
      im(l, j) = Cplx(0.0, -s);
      basis.push_back(im);
    }
  }
  return basis;
}

RVec hermitian_to_realvec(const Mat& h) {
  const int d = static_cast<int>(h.rows());
  RVec v(d * d);
  int k = 0;
  for (int j = 0; j < d; ++j) v(k++) = h(j, j).real();
  const double s = std::sqrt(2.0);
  for (int j = 0; j < d; ++j) {
    for (int l = j + 1; l < d; ++l) {
      v(k++) = s * h(j, l).real();
      v(k++) = -s * h(j, l).imag();
    }
  }
  return v;
}

Mat realvec_to_hermitian(const RVec& v, int d) {
  Mat h = Mat::Zero(d, d);
  int k = 0;
  for (int j = 0; j < d; ++j) h(j, j) = v(k++);
  const double s = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < d; ++j) {
    for (int l = j + 1; l < d; ++l) {
      const double re = v(k++) * s;
      const double im = -v(k++) * s;
      h(j, l) = Cplx(re, im);
      h(l, j) = Cplx(re, -im);
    }
  }
  return h;
}

RMat nullspace(const RMat& m, double rel_tol, double sigma_floor) {
  Eigen::JacobiSVD<RMat> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  const double cutoff = rel_tol * std::max(smax, sigma_floor);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return svd.matrixV().rightCols(m.cols() - rank);
}

Mat random_unitary(int d, Rng& rng) {
  Mat g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = rng.cgauss();
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const Cplx rd = r(j, j);
    const double a = std::abs(rd);
    q.col(j) *= (a > 0) ? rd / a : Cplx(1.0, 0.0);
  }
  return q;
}

Mat unitary_exp_ih(const Mat& h, double t) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  const RVec& lam = es.eigenvalues();
  Vec phases(lam.size());
  for (int i = 0; i < lam.size(); ++i) phases(i) = std::exp(Cplx(0.0, t * lam(i)));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

std::vector<std::pair<int, int>> degeneracy_clusters(const RVec& descending, double eps_deg) {
  std::vector<std::pair<int, int>> clusters;
  const int d = static_cast<int>(descending.size());
  int begin = 0;
  for (int i = 1; i <= d; ++i) {
    if (i == d || descending(i - 1) - descending(i) > eps_deg) {
      clusters.emplace_back(begin, i);
      begin = i;
    }
  }
  return clusters;
}

void fix_column_phases(Mat& u) {
  for (int j = 0; j < u.cols(); ++j) {
    int arg = 0;
    double best = 0.0;
    for (int i = 0; i < u.rows(); ++i) {
      const double a = std::abs(u(i, j));
      if (a > best + 1e-14) {
        best = a;
        arg = i;
      }
    }
    if (best > 0) u.col(j) *= std::conj(u(arg, j)) / best;
  }
}

namespace {

// Diagonalizes family[from..] restricted to the subspace spanned by the
// current columns [lo, hi) of u, refining recursively on eigenvalue clusters.
void diagonalize_block(std::vector<Mat> const& family, std::size_t from, Mat& u, int lo, int hi,
                       double cluster_tol) {
  const int k = hi - lo;
  if (k <= 1 || from >= family.size()) return;
  const Mat block = u.middleCols(lo, k).adjoint() * family[from] * u.middleCols(lo, k);
  Eigen::SelfAdjointEigenSolver<Mat> es(block);
  u.middleCols(lo, k) = u.middleCols(lo, k) * es.eigenvectors();
  const RVec lam = es.eigenvalues();
  const double scale = std::max(1.0, lam.cwiseAbs().maxCoeff());
  int start = 0;
  for (int i = 1; i <= k; ++i) {
    if (i == k || lam(i) - lam(i - 1) > cluster_tol * scale) {
      diagonalize_block(family, from + 1, u, lo + start, lo + i, cluster_tol);
      start = i;
    }
  }
}

}  // namespace

Mat simultaneous_diagonalizer(const std::vector<Mat>& commuting, double tol) {
  if (commuting.empty()) throw PreconditionError("simultaneous_diagonalizer: empty family");
  const int d = static_cast<int>(commuting.front().rows());
  Mat u = Mat::Identity(d, d);
  diagonalize_block(commuting, 0, u, 0, d, 1e-8);
  double resid = 0.0;
  for (const Mat& h : commuting) resid = std::max(resid, max_offdiag(u.adjoint() * h * u));
  if (resid > tol) {
    throw NumericalError("simultaneous diagonalization residual " + std::to_string(resid) +
                         " exceeds tolerance " + std::to_string(tol));
  }
  fix_column_phases(u);
  return u;
}

}  // namespace pinlab
