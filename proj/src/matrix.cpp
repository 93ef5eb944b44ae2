#include "nilext/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace nilext {

std::optional<Scalar> parse_scalar(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class num(s);
      return Scalar(num);
    }
    std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
    if (ns.empty() || ds.empty()) return std::nullopt;
    mpz_class num(ns), den(ds);
    if (den == 0) return std::nullopt;
    Scalar q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::string scalar_str(const Scalar& q) {
  std::ostringstream os;
  if (q.get_den() == 1)
    os << q.get_num();
  else
    os << q.get_num() << "/" << q.get_den();
  return os.str();
}

Scalar pow_scalar(const Scalar& base, unsigned exp) {
  Scalar r(1);
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

Vec zero_vec(std::size_t n) { return Vec(n, Scalar(0)); }

Vec add(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar& c, const Vec& a) {
  Vec r(a);
  for (auto& x : r) x *= c;
  return r;
}

bool is_zero_vec(const Vec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

const std::vector<Scalar>& sample_grid() {
  static const std::vector<Scalar> grid = {
      frac(1),  frac(0),  frac(-1), frac(2),  frac(1, 2),
      frac(-2), frac(3),  frac(-1, 2), frac(1, 3), frac(-3)};
  return grid;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("from_rows: ragged input");
    m.set_row(i, rows[i]);
  }
  return m;
}

Vec Matrix::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void Matrix::set_row(std::size_t i, const Vec& v) {
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

Vec mat_vec(const Matrix& m, const Vec& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("mat_vec: shape mismatch");
  Vec r(m.rows(), Scalar(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) r[i] += m.at(i, j) * v[j];
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix c(a);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) += b.at(i, j);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  Matrix c(a);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) -= b.at(i, j);
  return c;
}

Matrix scalar_mul(const Scalar& c, const Matrix& m) {
  Matrix r(m);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) *= c;
  return r;
}

Rref rref(const Matrix& m) {
  Matrix a(m);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a.at(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
    Scalar inv = Scalar(1) / a.at(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Scalar f = a.at(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {a, pivots};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vec> kernel_basis(const Matrix& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols(), Scalar(0));
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.mat.at(i, f);
    basis.push_back(v);
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (m.rows() != b.size()) throw std::invalid_argument("solve: shape mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  Rref r = rref(aug);
  for (auto p : r.pivots)
    if (p == m.cols()) return std::nullopt;  // pivot in the constant column
  Vec x(m.cols(), Scalar(0));
  for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.mat.at(i, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  Rref r = rref(aug);
  if (r.pivots.size() != n || r.pivots.back() != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
  return inv;
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
  Matrix a(m);
  std::size_t n = a.rows();
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a.at(p, c) == 0) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(c, j));
      det = -det;
    }
    det *= a.at(c, c);
    Scalar inv = Scalar(1) / a.at(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a.at(i, c) == 0) continue;
      Scalar f = a.at(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
    }
  }
  return det;
}

}  // namespace nilext
