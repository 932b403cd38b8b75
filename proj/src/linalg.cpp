#include "quograph/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace quograph {

namespace {

constexpr const char* kModule = "exact-linalg";

template <typename T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows())
    throw InputError(kModule, "mat_mul: inner dimensions differ (" +
                                  std::to_string(a.cols()) + " vs " +
                                  std::to_string(b.rows()) + ")");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == 0) continue;
      auto brow = b.row(k);
      auto crow = c.row(i);
      for (std::size_t j = 0; j < b.cols(); ++j) crow[j] += aik * brow[j];
    }
  }
  return c;
}

Integer lcm_of_denominators(std::span<const Rational> row) {
  Integer l = 1;
  for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

// Scales every row of a rational matrix by the lcm of its denominators.
// Row scaling preserves both rank and the solution set.
IntegerMatrix clear_denominators(const RationalMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = m.row(i);
    const Integer l = lcm_of_denominators(row);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational scaled = row[j] * l;
      out(i, j) = scaled.get_num();
    }
  }
  return out;
}

struct EchelonForm {
  IntegerMatrix m;
  std::vector<std::size_t> pivot_cols;  // pivot of row k is pivot_cols[k]
};

// Fraction-free Gaussian elimination (Bareiss) to row echelon form. Pivots
// are searched only in columns [0, pivot_limit); the update is applied to
// every column, so trailing columns act as right-hand sides. The pivot in
// each column is the entry of largest magnitude.
EchelonForm bareiss_echelon(IntegerMatrix m, std::size_t pivot_limit) {
  EchelonForm ef;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Integer prev = 1;
  std::size_t k = 0;
  for (std::size_t col = 0; col < pivot_limit && k < rows; ++col) {
    std::size_t best = rows;
    for (std::size_t i = k; i < rows; ++i) {
      if (m(i, col) == 0) continue;
      if (best == rows || mpz_cmpabs(m(i, col).get_mpz_t(), m(best, col).get_mpz_t()) > 0) best = i;
    }
    if (best == rows) continue;
    if (best != k)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(k, j), m(best, j));
    const Integer pivot = m(k, col);
    for (std::size_t i = k + 1; i < rows; ++i) {
      const Integer factor = m(i, col);
      for (std::size_t j = col + 1; j < cols; ++j) {
        Integer v = pivot * m(i, j) - factor * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
      m(i, col) = 0;
    }
    // Entries left of `col` in rows below k are already zero.
    prev = pivot;
    ef.pivot_cols.push_back(col);
    ++k;
  }
  ef.m = std::move(m);
  return ef;
}

}  // namespace

IntegerMatrix mat_mul(const IntegerMatrix& a, const IntegerMatrix& b) {
  return multiply(a, b);
}

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
  return multiply(a, b);
}

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

std::optional<IntegerMatrix> to_integer(const RationalMatrix& m) {
  IntegerMatrix z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) return std::nullopt;
      z(i, j) = m(i, j).get_num();
    }
  }
  return z;
}

std::size_t rank(const IntegerMatrix& m) {
  return bareiss_echelon(m, m.cols()).pivot_cols.size();
}

std::size_t rank(const RationalMatrix& m) { return rank(clear_denominators(m)); }

std::optional<RationalMatrix> solve(const RationalMatrix& a,
                                    const RationalMatrix& b) {
  if (a.rows() != b.rows())
    throw InputError(kModule, "solve: a and b have different row counts");
  const std::size_t n = a.cols();
  const std::size_t nrhs = b.cols();

  RationalMatrix aug(a.rows(), n + nrhs);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < nrhs; ++j) aug(i, n + j) = b(i, j);
  }
  EchelonForm ef = bareiss_echelon(clear_denominators(aug), n);
  const std::size_t k = ef.pivot_cols.size();

  for (std::size_t i = k; i < ef.m.rows(); ++i)
    for (std::size_t j = n; j < n + nrhs; ++j)
      if (ef.m(i, j) != 0) return std::nullopt;

  RationalMatrix x(n, nrhs);
  for (std::size_t t = 0; t < nrhs; ++t) {
    for (std::size_t p = k; p-- > 0;) {
      const std::size_t pc = ef.pivot_cols[p];
      Rational acc(ef.m(p, n + t));
      for (std::size_t q = p + 1; q < k; ++q) {
        const std::size_t qc = ef.pivot_cols[q];
        if (ef.m(p, qc) != 0) acc -= Rational(ef.m(p, qc)) * x(qc, t);
      }
      acc /= Rational(ef.m(p, pc));
      x(pc, t) = std::move(acc);
    }
  }

  if (!(mat_mul(a, x) == b))
    throw ContractViolation(kModule, "solve: back-substitution check failed");
  return x;
}

RationalMatrix vectorized_columns(std::span<const IntegerMatrix> mats) {
  if (mats.empty()) return {};
  const std::size_t len = mats.front().rows() * mats.front().cols();
  RationalMatrix out(len, mats.size());
  for (std::size_t k = 0; k < mats.size(); ++k) {
    auto flat = mats[k].flat();
    if (flat.size() != len)
      throw InputError(kModule, "vectorized_columns: shape mismatch");
    for (std::size_t r = 0; r < len; ++r) out(r, k) = Rational(flat[r]);
  }
  return out;
}

// --- RowSpace ---------------------------------------------------------------

std::vector<Integer> RowSpace::reduce(std::span<const Integer> row) const {
  if (row.size() != width_)
    throw InputError(kModule, "RowSpace: row width mismatch");
  std::vector<Integer> v(row.begin(), row.end());
  Integer g;
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    const std::size_t p = pivots_[b];
    if (v[p] == 0) continue;
    const Integer bp = basis_[b][p];
    const Integer vp = v[p];
    // Basis row b vanishes left of its pivot, so those entries only scale.
    for (std::size_t j = 0; j < p; ++j) v[j] *= bp;
    for (std::size_t j = p; j < width_; ++j) v[j] = v[j] * bp - basis_[b][j] * vp;
    g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
      for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return v;
}

bool RowSpace::add(std::span<const Integer> row) {
  std::vector<Integer> v = reduce(row);
  auto nz = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
  if (nz == v.end()) return false;
  const auto p = static_cast<std::size_t>(nz - v.begin());
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  const auto idx = pos - pivots_.begin();
  pivots_.insert(pos, p);
  basis_.insert(basis_.begin() + idx, std::move(v));
  return true;
}

bool RowSpace::contains(std::span<const Integer> row) const {
  const std::vector<Integer> v = reduce(row);
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

// --- Polynomial -------------------------------------------------------------

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::x() { return Polynomial({Rational(0), Rational(1)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
  return acc;
}

long double Polynomial::operator()(long double x) const {
  long double acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;)
    acc = acc * x + static_cast<long double>(coeffs_[k].get_d());
  return acc;
}

long double Polynomial::abs_bound(long double x) const {
  const long double ax = std::fabs(x);
  long double acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;)
    acc = acc * ax + std::fabs(static_cast<long double>(coeffs_[k].get_d()));
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + Rational(-1) * b;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  std::vector<Rational> c = p.coeffs_;
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  // p = (g/L) * q with q primitive integer.
  const Integer l = lcm_of_denominators(coeffs_);
  std::vector<Integer> q(coeffs_.size());
  Integer g = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    Rational scaled = coeffs_[k] * l;
    q[k] = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q[k].get_mpz_t());
  }
  for (auto& c : q) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  Rational factor(g, l);
  factor.canonicalize();

  std::string body;
  bool first = true;
  for (std::size_t k = q.size(); k-- > 0;) {
    if (q[k] == 0) continue;
    const bool negative = q[k] < 0;
    const Integer mag = abs(q[k]);
    if (first) {
      if (negative) body += "-";
    } else {
      body += negative ? " - " : " + ";
    }
    if (mag != 1 || k == 0) body += mag.get_str();
    if (k >= 1) body += "x";
    if (k >= 2) body += "^" + std::to_string(k);
    first = false;
  }
  if (factor == 1) return body;
  const auto nonzero =
      std::count_if(q.begin(), q.end(), [](const Integer& c) { return c != 0; });
  if (nonzero == 1) {
    const std::size_t k = q.size() - 1;
    if (k == 0) return quograph::to_string(coeffs_[0]);
    std::string mono = k == 1 ? "x" : "x^" + std::to_string(k);
    return quograph::to_string(coeffs_[k]) + " " + mono;
  }
  return quograph::to_string(factor) + " (" + body + ")";
}

RationalMatrix eval_poly(const Polynomial& p, const IntegerMatrix& a) {
  if (!a.is_square()) throw InputError(kModule, "eval_poly: matrix is not square");
  const std::size_t n = a.rows();
  if (p.is_zero()) return RationalMatrix(n, n);
  // p = q / l with integer q; evaluate q(A) by Horner over the integers.
  const Integer l = lcm_of_denominators(p.coefficients());
  std::vector<Integer> q;
  q.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    Rational scaled = c * l;
    q.push_back(scaled.get_num());
  }
  IntegerMatrix acc = IntegerMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) acc(i, i) = q.back();
  for (std::size_t k = q.size() - 1; k-- > 0;) {
    acc = mat_mul(acc, a);
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += q[k];
  }
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = Rational(acc(i, j), l);
      out(i, j).canonicalize();
    }
  return out;
}

std::string to_string(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError(kModule, "empty integer", 0);
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw ParseError(kModule, "bad integer '" + s + "'", 0);
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw ParseError(kModule, "bad integer '" + s + "'", i);
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ParseError(kModule, "zero denominator", slash + 1);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace quograph
