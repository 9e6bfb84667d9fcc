#include "cp2q/numeric.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

#include "cp2q/haar.hpp"

namespace cp2q::numeric {

namespace {

double laurent_at(const LaurentV& p, double v) {
  double s = 0;
  for (std::size_t i = 0; i < p.dense().size(); ++i) s += p.dense()[i].get_d() * std::pow(v, p.low() + static_cast<int>(i));
  return s;
}

double at(const RatV& x, double q) {
  const double v = std::pow(q, 0.25);
  return laurent_at(x.num(), v) / laurent_at(x.den(), v);
}

// Powers of q spread the entries over many orders of magnitude, so rows and
// columns are rescaled to unit max-norm (rank is unchanged) before the SVD.
std::size_t dense_rank(Eigen::MatrixXd m, double rel_tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  for (int sweep = 0; sweep < 10; ++sweep) {
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (double mx = m.row(r).cwiseAbs().maxCoeff(); mx > 0) m.row(r) /= mx;
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (double mx = m.col(c).cwiseAbs().maxCoeff(); mx > 0) m.col(c) /= mx;
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0) return 0;
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) rank += sv(i) > rel_tol * sv(0);
  return rank;
}

}  // namespace

double qint(int n, double q) { return (std::pow(q, n) - std::pow(q, -n)) / (q - 1 / q); }

double qfact(int n, double q) {
  double r = 1;
  for (int k = 2; k <= n; ++k) r *= qint(k, q);
  return r;
}

double qtrinom(int j, int k, int l, double q) {
  return std::pow(q, -(j * k + k * l + l * j)) * qfact(j + k + l, q) / (qfact(j, q) * qfact(k, q) * qfact(l, q));
}

double frame_coefficient(int N, int j, int k, int l, double q) {
  const double c = std::sqrt(qtrinom(j, k, l, q));
  return N >= 0 ? c : std::pow(q, 2 * j + k) * c;
}

double gamma_coefficient(int n, int N, double q) {
  if (N >= 0) return std::sqrt(qint(n, q) * qint(n + N + 2, q) / qint(2, q));
  return std::sqrt(qint(n - N, q) * qint(n + 2, q) / qint(2, q));
}

double closed_form_coefficient(int N, int j2, int m2, double q) {
  const int r2 = j2 - m2, s2 = j2 + m2;  // doubled exponents of z1, z2
  if (r2 % 2 != 0 || s2 % 2 != 0 || r2 < 0 || s2 < 0 || j2 > N) throw std::invalid_argument("bad closed-form label");
  const int r = r2 / 2, s = s2 / 2;
  const double alpha = -j2 * N / 2.0 - r * j2 / 2.0 + j2 * j2 / 2.0 + r * r / 2.0;
  return qfact(j2 + 1, q) * std::sqrt(qfact(N, q) / (qfact(r, q) * qfact(s, q) * qfact(N - j2, q))) * std::pow(q, alpha);
}

std::size_t rank(const SparseMatrix& m, double q0, double rel_tol) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, x] : m.row(r)) d(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = at(x, q0);
  return dense_rank(std::move(d), rel_tol);
}

std::size_t rank(const std::vector<DenseVec>& rows, double q0, double rel_tol) {
  if (rows.empty()) return 0;
  Eigen::MatrixXd d(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      d(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c].is_zero() ? 0.0 : at(rows[r][c], q0);
  return dense_rank(std::move(d), rel_tol);
}

std::size_t nullity(const SparseMatrix& m, double q0, double rel_tol) { return m.cols() - rank(m, q0, rel_tol); }

Haar::Haar(int D, double q0) : D_(D), q0_(q0) {
  const auto in_slice = [D](const Word& w) {
    auto [a, b] = bidegree(w);
    return a <= D && b <= D;
  };
  const std::vector<Word> words = s5q().sys.normal_words(static_cast<std::size_t>(2 * D), in_slice);
  std::map<Word, Eigen::Index> col;
  for (std::size_t i = 0; i < words.size(); ++i) col[words[i]] = static_cast<Eigen::Index>(i);

  std::vector<Eigen::VectorXd> rows;
  auto add_row = [&](const PolyR& image) {
    Eigen::VectorXd r = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(words.size()));
    for (const auto& [w, c] : image.terms()) r(col.at(w)) += at(c, q0);
    rows.push_back(std::move(r));
  };
  for (const auto& w : words) {
    auto [l1, l2] = k_weight(Side::Left, s5q(), w);
    if (l1 != 0 || l2 != 0 || line_degree(w) != 0) add_row(PolyR::word(w));
    for (UqGen g : {UqGen::E1, UqGen::E2, UqGen::F1, UqGen::F2}) add_row(act_left_s5(g, PolyR::word(w)));
  }
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(words.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();

  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(1e-9);
  Eigen::MatrixXd ker = lu.kernel();
  kernel_dim_ = static_cast<std::size_t>(lu.dimensionOfKernel());
  if (kernel_dim_ != 1) return;
  const double unit = ker(col.at(Word{}), 0);
  for (std::size_t i = 0; i < words.size(); ++i) values_[words[i]] = ker(static_cast<Eigen::Index>(i), 0) / unit;
}

double Haar::operator()(const PolyR& x) const {
  if (kernel_dim_ != 1) throw std::logic_error("numeric Haar functional is not unique");
  const PolyR nx = s5q().reduce(x);
  double s = 0;
  for (const auto& [w, c] : nx.terms()) {
    auto it = values_.find(w);
    if (it == values_.end()) throw std::domain_error("outside the numeric Haar slice");
    s += at(c, q0_) * it->second;
  }
  return s;
}

}  // namespace cp2q::numeric
