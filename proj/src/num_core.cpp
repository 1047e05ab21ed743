#include "diagroof/num_core.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace diagroof {

ProbVector::ProbVector(Eigen::VectorXd entries) : entries_(std::move(entries)) {
  if (entries_.size() == 0) throw DomainError("ProbVector: empty");
  for (auto& p : entries_) {
    if (p < 0.0) {
      if (p < -kClampWindow) throw DomainError("ProbVector: negative entry");
      p = 0.0;
    }
  }
  if (std::abs(entries_.sum() - 1.0) > 1e-10) throw DomainError("ProbVector: entries do not sum to 1");
}

double shannon_entropy(const ProbVector& p) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) s += eta(p[i]);
  return s;
}

ComplexHermitian::ComplexHermitian(const ComplexMatrix& m) {
  if (m.rows() == 0 || m.rows() != m.cols()) throw DomainError("ComplexHermitian: matrix must be square and non-empty");
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-12) throw DomainError("ComplexHermitian: matrix is not hermitian");
  mat_ = 0.5 * (m + m.adjoint());
}

HermitianEigen hermitian_eigen(const ComplexHermitian& h) {
  using cd = std::complex<double>;
  ComplexMatrix a = h.matrix();
  const Eigen::Index n = a.rows();
  ComplexMatrix v = ComplexMatrix::Identity(n, n);
  const double threshold = 1e-13 * std::max(1.0, a.norm());

  auto off_norm = [&] {
    double s = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < 50 && off_norm() > threshold; ++sweep) {
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        const cd phase = a(p, q) / mag;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // A <- A J, V <- V J
        auto rotate_cols = [&](ComplexMatrix& m) {
          const ComplexVector cp = m.col(p);
          const ComplexVector cq = m.col(q);
          m.col(p) = c * cp - s * std::conj(phase) * cq;
          m.col(q) = s * cp + c * std::conj(phase) * cq;
        };
        rotate_cols(a);
        rotate_cols(v);
        // A <- J^H A
        const Eigen::RowVectorXcd rp = a.row(p);
        const Eigen::RowVectorXcd rq = a.row(q);
        a.row(p) = c * rp - s * phase * rq;
        a.row(q) = s * rp + c * phase * rq;

        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::sort(order.begin(), order.end(), [&](auto i, auto j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEigen out{Eigen::VectorXd(n), ComplexMatrix(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexHermitian& h) { return hermitian_eigen(h).values; }

}  // namespace diagroof
