#include "strange/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <utility>

#include "strange/error.hpp"

namespace strange {

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(const std::vector<std::vector<std::int64_t>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()), data_(rows_ * cols_) {
  for (std::size_t i = 0; i < rows_; ++i) {
    if (rows[i].size() != cols_) throw Error(ErrorCode::Malformed, "ragged matrix rows");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = rows[i][j];
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::ShapeMismatch, "matrix product dimension mismatch");
  IntMatrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
    }
  return p;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix n = *this;
  for (auto& v : n.data_) v = -v;
  return n;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

BigInt determinant(const IntMatrix& input) {
  if (!input.is_square()) throw Error(ErrorCode::ShapeMismatch, "determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntPolynomial characteristic_polynomial(const IntMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, "characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  IntMatrix m(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    IntMatrix am = a * m;
    BigInt tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / static_cast<long long>(k);
  }
  return IntPolynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// Constructors

GramLattice make_lattice(IntMatrix gram, std::vector<std::string> labels) {
  if (!gram.is_symmetric()) throw Error(ErrorCode::Malformed, "Gram matrix is not symmetric");
  if (labels.size() != gram.rows()) throw Error(ErrorCode::Malformed, "label count does not match rank");
  return GramLattice{std::move(gram), std::move(labels)};
}

GramLattice star(const std::vector<std::int64_t>& arms) {
  std::size_t rank = 1;
  for (auto b : arms) {
    if (b < 2) throw Error(ErrorCode::Malformed, "star arm parameters must be at least 2");
    rank += static_cast<std::size_t>(b - 1);
  }
  IntMatrix g(rank, rank);
  std::vector<std::string> labels;
  const std::size_t center = rank - 1;
  std::size_t idx = 0;
  for (std::size_t a = 0; a < arms.size(); ++a) {
    const auto len = static_cast<std::size_t>(arms[a] - 1);
    // Arm listed from its tip inward; the last vertex touches the center.
    for (std::size_t k = 0; k < len; ++k, ++idx) {
      labels.push_back("a" + std::to_string(a + 1) + "." + std::to_string(len - k));
      const std::size_t next = (k + 1 == len) ? center : idx + 1;
      g(idx, next) = g(next, idx) = 1;
    }
  }
  labels.emplace_back("c");
  for (std::size_t i = 0; i < rank; ++i) g(i, i) = -2;
  return make_lattice(std::move(g), std::move(labels));
}

GramLattice star3(std::int64_t b1, std::int64_t b2, std::int64_t b3) { return star({b1, b2, b3}); }

GramLattice star4(std::int64_t b1, std::int64_t b2, std::int64_t b3, std::int64_t b4) {
  return star({b1, b2, b3, b4});
}

namespace {

GramLattice chain(std::size_t n, const std::string& prefix) {
  IntMatrix g(n, n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = -2;
    if (i + 1 < n) g(i, i + 1) = g(i + 1, i) = 1;
    labels.push_back(prefix + std::to_string(i + 1));
  }
  return make_lattice(std::move(g), std::move(labels));
}

std::int64_t parse_positive(std::string_view s, std::string_view context) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v <= 0)
    throw Error(ErrorCode::Malformed, "expected positive integer in '" + std::string(context) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

GramLattice dynkin(std::string_view symbol) {
  symbol = trim(symbol);
  if (symbol.size() < 2) throw Error(ErrorCode::UnknownSymbol, "unknown root system '" + std::string(symbol) + "'");
  const char type = symbol.front();
  std::string_view digits = symbol.substr(1);
  if (!digits.empty() && digits.front() == '_') digits.remove_prefix(1);
  std::int64_t n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || n <= 0)
    throw Error(ErrorCode::UnknownSymbol, "unknown root system '" + std::string(symbol) + "'");
  switch (type) {
    case 'A':
      return chain(static_cast<std::size_t>(n), "r");
    case 'D':
      if (n < 4) break;
      return star3(2, 2, n - 2);
    case 'E':
      if (n < 6 || n > 8) break;
      return star3(2, 3, n - 3);
    default:
      break;
  }
  throw Error(ErrorCode::UnknownSymbol, "unknown root system '" + std::string(symbol) + "'");
}

GramLattice hyperbolic_u() { return make_lattice(IntMatrix({{0, 1}, {1, 0}}), {"e", "f"}); }

GramLattice minus_e8() {
  // Bourbaki numbering: 1-3-4-5-6-7-8 with 2 attached to 4.
  IntMatrix g(8, 8);
  const std::pair<int, int> edges[] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
  for (auto [a, b] : edges) g(a - 1, b - 1) = g(b - 1, a - 1) = 1;
  std::vector<std::string> labels;
  for (int i = 1; i <= 8; ++i) labels.push_back("e" + std::to_string(i));
  return make_lattice(std::move(g), std::move(labels));
}

GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
  const std::size_t n = a.rank() + b.rank();
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) g(i, j) = a.gram(i, j);
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j) g(a.rank() + i, a.rank() + j) = b.gram(i, j);
  std::vector<std::string> labels = a.labels;
  labels.insert(labels.end(), b.labels.begin(), b.labels.end());
  return make_lattice(std::move(g), std::move(labels));
}

GramLattice k3_lattice() {
  GramLattice l = direct_sum(minus_e8(), minus_e8());
  for (int i = 0; i < 3; ++i) l = direct_sum(l, hyperbolic_u());
  return l;
}

GramLattice k24() { return direct_sum(k3_lattice(), hyperbolic_u()); }

GramLattice parse_lattice_expr(std::string_view text) {
  std::optional<GramLattice> acc;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t plus = text.find('+', start);
    if (plus == std::string_view::npos) plus = text.size();
    const std::string_view term = trim(text.substr(start, plus - start));
    GramLattice part;
    if (term.empty()) {
      throw Error(ErrorCode::Malformed, "empty term in lattice expression '" + std::string(text) + "'");
    } else if (term.starts_with("star:")) {
      std::vector<std::int64_t> arms;
      std::string_view rest = term.substr(5);
      std::size_t p = 0;
      while (p <= rest.size()) {
        std::size_t comma = rest.find(',', p);
        if (comma == std::string_view::npos) comma = rest.size();
        arms.push_back(parse_positive(trim(rest.substr(p, comma - p)), term));
        p = comma + 1;
      }
      part = star(arms);
    } else if (term == "U") {
      part = hyperbolic_u();
    } else if (term == "-E8") {
      part = minus_e8();
    } else if (term == "K3") {
      part = k3_lattice();
    } else if (term == "K24") {
      part = k24();
    } else {
      try {
        part = dynkin(term);
      } catch (const Error&) {
        throw Error(ErrorCode::Malformed, "unknown lattice term '" + std::string(term) + "'");
      }
    }
    acc = acc ? direct_sum(*acc, part) : part;
    start = plus + 1;
  }
  return *acc;
}

// ---------------------------------------------------------------------------
// Invariants

BigInt determinant(const GramLattice& lattice) { return determinant(lattice.gram); }

std::vector<BigInt> smith_invariants(const GramLattice& lattice) {
  if (determinant(lattice) == 0) throw Error(ErrorCode::DegenerateForm, "Gram matrix is degenerate");
  IntMatrix m = lattice.gram;
  const std::size_t n = m.rows();
  using boost::multiprecision::abs;

  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // Full pivoting: smallest nonzero magnitude in the trailing block.
      std::size_t pi = n, pj = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (m(i, j) != 0 && (pi == n || abs(m(i, j)) < abs(m(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == n) break;  // unreachable for nondegenerate input
      for (std::size_t j = 0; j < n; ++j) std::swap(m(t, j), m(pi, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(m(i, t), m(i, pj));

      bool dirty = false;
      const BigInt p = m(t, t);
      for (std::size_t i = t + 1; i < n; ++i) {
        if (m(i, t) == 0) continue;
        const BigInt q = m(i, t) / p;
        for (std::size_t j = t; j < n; ++j) m(i, j) -= q * m(t, j);
        dirty = dirty || m(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (m(t, j) == 0) continue;
        const BigInt q = m(t, j) / p;
        for (std::size_t i = t; i < n; ++i) m(i, j) -= q * m(i, t);
        dirty = dirty || m(t, j) != 0;
      }
      if (dirty) continue;

      // Pivot must divide the rest of the block; otherwise fold the offending row in.
      std::size_t bad = n;
      for (std::size_t i = t + 1; i < n && bad == n; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (m(i, j) % p != 0) {
            bad = i;
            break;
          }
      if (bad == n) break;
      for (std::size_t j = t; j < n; ++j) m(t, j) += m(bad, j);
    }
  }

  std::vector<BigInt> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(abs(m(i, i)));
  std::sort(out.begin(), out.end());
  return out;
}

Signature signature(const GramLattice& lattice) {
  const std::size_t n = lattice.rank();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(lattice.gram(i, j));

  auto swap_index = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(m[a], m[b]);
    for (auto& row : m) std::swap(row[a], row[b]);
  };

  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i)
      if (m[i][i] != 0) {
        piv = i;
        break;
      }
    if (piv == n) {
      // Zero diagonal: replace e_i by e_i + e_j for an off-diagonal nonzero,
      // producing diagonal 2·m_ij.
      std::size_t oi = n, oj = n;
      for (std::size_t i = k; i < n && oi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (m[i][j] != 0) {
            oi = i;
            oj = j;
            break;
          }
      if (oi == n) {
        sig.zero += n - k;
        break;
      }
      for (std::size_t c = 0; c < n; ++c) m[oi][c] += m[oj][c];
      for (std::size_t r = 0; r < n; ++r) m[r][oi] += m[r][oj];
      piv = oi;
    }
    swap_index(k, piv);
    const Rational p = m[k][k];
    (p > 0 ? sig.positive : sig.negative) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      const Rational f = m[i][k] / p;
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
    for (std::size_t i = k + 1; i < n; ++i) m[k][i] = m[i][k] = 0;
  }
  return sig;
}

// ---------------------------------------------------------------------------
// Coxeter elements

IntMatrix coxeter_matrix(const GramLattice& lattice) {
  const std::size_t n = lattice.rank();
  for (std::size_t i = 0; i < n; ++i)
    if (lattice.gram(i, i) != -2)
      throw Error(ErrorCode::DiagonalNotMinusTwo, "basis vector " + lattice.labels[i] + " has self-intersection " +
                                                      lattice.gram(i, i).str());
  IntMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    v(i, i) = -1;
    for (std::size_t j = i + 1; j < n; ++j) v(i, j) = lattice.gram(i, j);
  }
  // V X = I by back substitution; V has −1 on the diagonal, so X is integral.
  IntMatrix x(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t i = n; i-- > 0;) {
      BigInt s = (i == col) ? 1 : 0;
      for (std::size_t k = i + 1; k < n; ++k) s -= v(i, k) * x(k, col);
      x(i, col) = -s;
    }
  }
  return -(x * v.transpose());
}

namespace {

IntMatrix matrix_power(IntMatrix base, std::int64_t e) {
  IntMatrix result = IntMatrix::identity(base.rows());
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

}  // namespace

LatticeAutomorphismReport coxeter_element(const GramLattice& lattice) {
  LatticeAutomorphismReport report;
  report.matrix = coxeter_matrix(lattice);
  report.char_poly = characteristic_polynomial(report.matrix);
  std::map<std::int64_t, std::int64_t> mult;
  try {
    mult = cyclotomic_multiplicities(report.char_poly);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotCyclotomicProduct) throw;
    return report;
  }
  std::int64_t h = 1;
  for (const auto& [d, e] : mult) h = std::lcm(h, d);
  report.frame = from_char_poly(report.char_poly, h);
  // A finite-order C is diagonalizable, so its order is exactly h.
  if (h <= kCoxeterOrderBound && matrix_power(report.matrix, h) == IntMatrix::identity(lattice.rank()))
    report.order = h;
  return report;
}

std::vector<std::string> parse_root_system(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t plus = text.find('+', start);
    if (plus == std::string_view::npos) plus = text.size();
    std::string_view term = trim(text.substr(start, plus - start));
    std::int64_t times = 1;
    if (auto caret = term.find('^'); caret != std::string_view::npos) {
      times = parse_positive(trim(term.substr(caret + 1)), term);
      term = trim(term.substr(0, caret));
    }
    if (term.empty()) throw Error(ErrorCode::UnknownSymbol, "empty root system component in '" + std::string(text) + "'");
    for (std::int64_t i = 0; i < times; ++i) out.emplace_back(term);
    start = plus + 1;
  }
  return out;
}

FrameShape coxeter_frame_of_root_system(const std::vector<std::string>& symbols) {
  FrameShape acc = FrameShape::empty();
  for (const auto& s : symbols) {
    const auto report = coxeter_element(dynkin(s));
    if (!report.frame)
      throw Error(ErrorCode::UnknownSymbol, "component " + s + " has no cyclotomic Coxeter element");
    acc = concatenate(acc, *report.frame);
  }
  return acc;
}

}  // namespace strange
