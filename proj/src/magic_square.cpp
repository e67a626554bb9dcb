#include "strange/magic_square.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "strange/error.hpp"
#include "strange/lattice.hpp"

namespace strange {

namespace {

bool is_square(const IntGrid& q) {
  return std::all_of(q.begin(), q.end(), [&](const auto& row) { return row.size() == q.size(); });
}

IntGrid flatten_order_key(const MagicSquare& s) { return s.entries; }

void compositions(const std::vector<std::int64_t>& w, std::size_t i, std::int64_t rest,
                  std::vector<std::int64_t>& cur, std::vector<std::vector<std::int64_t>>& out) {
  if (i + 1 == w.size()) {
    if (rest % w[i] == 0) {
      cur[i] = rest / w[i];
      out.push_back(cur);
    }
    return;
  }
  for (std::int64_t q = 0; q * w[i] <= rest; ++q) {
    cur[i] = q;
    compositions(w, i + 1, rest - q * w[i], cur, out);
  }
}

struct Search {
  const std::vector<std::int64_t>& right_weights;
  std::int64_t right_degree;
  const std::vector<std::vector<std::int64_t>>& columns;
  std::size_t rows;
  std::vector<std::size_t> chosen;
  std::vector<std::int64_t> row_sums;
  std::vector<IntGrid> found;

  void run(std::size_t j) {
    if (j == right_weights.size()) {
      for (auto s : row_sums)
        if (s != right_degree) return;
      IntGrid q(rows, std::vector<std::int64_t>(right_weights.size()));
      for (std::size_t c = 0; c < chosen.size(); ++c)
        for (std::size_t r = 0; r < rows; ++r) q[r][c] = columns[chosen[c]][r];
      found.push_back(std::move(q));
      return;
    }
    for (std::size_t k = 0; k < columns.size(); ++k) {
      const auto& col = columns[k];
      bool fits = true;
      for (std::size_t r = 0; r < rows && fits; ++r) fits = row_sums[r] + col[r] * right_weights[j] <= right_degree;
      if (!fits) continue;
      for (std::size_t r = 0; r < rows; ++r) row_sums[r] += col[r] * right_weights[j];
      chosen.push_back(k);
      run(j + 1);
      chosen.pop_back();
      for (std::size_t r = 0; r < rows; ++r) row_sums[r] -= col[r] * right_weights[j];
    }
  }
};

std::vector<MagicSquare> search(const WeightSystem& w, const WeightSystem& w_prime, bool primitive) {
  const std::int64_t n = w.magic_degree();
  const std::int64_t n_prime = w_prime.magic_degree();
  if (primitive && (n != n_prime || w.weights.size() != w_prime.weights.size())) return {};
  auto columns = weighted_compositions(w.weights, n);
  Search s{w_prime.weights, n_prime, columns, w.weights.size(), {}, std::vector<std::int64_t>(w.weights.size(), 0), {}};
  s.run(0);
  std::vector<MagicSquare> out;
  for (auto& q : s.found) {
    if (primitive && abs(grid_determinant(q)) != n) continue;
    out.push_back({std::move(q), w, w_prime});
  }
  std::sort(out.begin(), out.end(),
            [](const MagicSquare& a, const MagicSquare& b) { return flatten_order_key(a) < flatten_order_key(b); });
  return out;
}

}  // namespace

std::string MagicSquare::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < entries[i].size(); ++j) os << (j ? " " : "") << entries[i][j];
  }
  return os.str();
}

bool is_magic(const IntGrid& q, const WeightSystem& w, const WeightSystem& w_prime) {
  const std::size_t k = w.weights.size();
  const std::size_t l = w_prime.weights.size();
  if (q.size() != k || std::any_of(q.begin(), q.end(), [&](const auto& row) { return row.size() != l; }))
    throw Error(ErrorCode::ShapeMismatch, "matrix is not " + std::to_string(k) + "x" + std::to_string(l));
  const std::int64_t n = w.magic_degree();
  const std::int64_t n_prime = w_prime.magic_degree();
  for (const auto& row : q)
    for (auto v : row)
      if (v < 0) return false;
  for (std::size_t j = 0; j < l; ++j) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < k; ++i) s += w.weights[i] * q[i][j];
    if (s != n) return false;
  }
  for (std::size_t i = 0; i < k; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < l; ++j) s += q[i][j] * w_prime.weights[j];
    if (s != n_prime) return false;
  }
  return true;
}

bool is_primitive(const IntGrid& q, const WeightSystem& w, const WeightSystem& w_prime) {
  if (q.empty() || !is_square(q)) throw Error(ErrorCode::ShapeMismatch, "primitivity needs a square matrix");
  const std::int64_t n = w.magic_degree();
  return n == w_prime.magic_degree() && abs(grid_determinant(q)) == n;
}

BigInt grid_determinant(const IntGrid& q) {
  if (!is_square(q)) throw Error(ErrorCode::ShapeMismatch, "determinant needs a square matrix");
  return determinant(IntMatrix(q));
}

IntGrid transpose(const IntGrid& q) {
  if (q.empty()) return {};
  IntGrid t(q[0].size(), std::vector<std::int64_t>(q.size()));
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q[i].size(); ++j) t[j][i] = q[i][j];
  return t;
}

std::vector<std::vector<std::int64_t>> weighted_compositions(const std::vector<std::int64_t>& weights,
                                                             std::int64_t n) {
  std::vector<std::vector<std::int64_t>> out;
  if (weights.empty() || n < 0) return out;
  std::vector<std::int64_t> cur(weights.size(), 0);
  compositions(weights, 0, n, cur, out);
  return out;
}

std::vector<MagicSquare> find_magic_squares(const WeightSystem& w, const WeightSystem& w_prime,
                                            bool require_primitive) {
  return search(w, w_prime, require_primitive);
}

std::vector<WeightSystem> enumerate_duals(const WeightSystem& w) {
  if (w.weights.size() != 3 || w.degrees.size() != 1)
    throw Error(ErrorCode::WrongClass, "expected three weights and one degree, got " + w.to_string());
  const std::int64_t n = w.degrees[0];
  const auto cols = weighted_compositions(w.weights, n);
  std::set<std::vector<std::int64_t>> found;
  for (const auto& a : cols)
    for (const auto& b : cols)
      for (const auto& c : cols) {
        // Q has columns a, b, c; Q·w′ = N·1 is solved through the adjugate.
        const std::int64_t q[3][3] = {{a[0], b[0], c[0]}, {a[1], b[1], c[1]}, {a[2], b[2], c[2]}};
        auto minor = [&](int r0, int r1, int c0, int c1) { return q[r0][c0] * q[r1][c1] - q[r0][c1] * q[r1][c0]; };
        const std::int64_t det = q[0][0] * minor(1, 2, 1, 2) - q[0][1] * minor(1, 2, 0, 2) + q[0][2] * minor(1, 2, 0, 1);
        if (det != n && det != -n) continue;
        const std::int64_t adj[3][3] = {
            {minor(1, 2, 1, 2), -minor(0, 2, 1, 2), minor(0, 1, 1, 2)},
            {-minor(1, 2, 0, 2), minor(0, 2, 0, 2), -minor(0, 1, 0, 2)},
            {minor(1, 2, 0, 1), -minor(0, 2, 0, 1), minor(0, 1, 0, 1)},
        };
        std::vector<std::int64_t> wp(3);
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
          const std::int64_t num = n * (adj[i][0] + adj[i][1] + adj[i][2]);
          ok = num % det == 0 && num / det > 0;
          if (ok) wp[i] = num / det;
        }
        if (!ok) continue;
        std::sort(wp.begin(), wp.end());
        WeightSystem cand{wp, {n}};
        if (cand.is_reduced() && cand.degrees_representable()) found.insert(wp);
      }
  std::vector<WeightSystem> out;
  for (const auto& wp : found) out.push_back({wp, {n}});
  return out;
}

std::string_view to_string(SquareConvention c) {
  switch (c) {
    case SquareConvention::Square4x4: return "square-4x4";
    case SquareConvention::Rect3x4: return "rect-3x4";
    case SquareConvention::Rect4x3: return "rect-4x3";
  }
  return "?";
}

SquareConvention parse_convention(std::string_view text) {
  for (auto c : {SquareConvention::Square4x4, SquareConvention::Rect3x4, SquareConvention::Rect4x3})
    if (to_string(c) == text) return c;
  throw Error(ErrorCode::UnsupportedConvention, "unknown convention '" + std::string(text) + "'");
}

std::vector<MagicSquare> find_generalized_squares(const WeightSystem& w, const WeightSystem& w_prime,
                                                  SquareConvention convention) {
  std::size_t rows = 4, cols = 4;
  if (convention == SquareConvention::Rect3x4) rows = 3;
  if (convention == SquareConvention::Rect4x3) cols = 3;
  if (w.weights.size() != rows || w_prime.weights.size() != cols)
    throw Error(ErrorCode::ShapeMismatch, std::string(to_string(convention)) + " needs " + std::to_string(rows) +
                                              " and " + std::to_string(cols) + " weights, got " + w.to_string() +
                                              " and " + w_prime.to_string());
  return search(w, w_prime, convention == SquareConvention::Square4x4);
}

}  // namespace strange
