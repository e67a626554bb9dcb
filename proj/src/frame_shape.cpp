#include "strange/frame_shape.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <vector>

#include "strange/error.hpp"

namespace strange {

namespace {

void canonicalize(FrameShape::Exponents& exps) {
  std::erase_if(exps, [](const auto& kv) { return kv.second == 0; });
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t totient(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

class ShapeParser {
 public:
  explicit ShapeParser(std::string_view text) : text_(text) {}

  FrameShape parse() {
    FrameShape::Exponents exps;
    product(exps, +1);
    if (accept('/')) product(exps, -1);
    std::int64_t order = 0;
    if (accept('@')) order = number("order");
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    canonicalize(exps);
    if (exps.empty()) throw Error(ErrorCode::EmptyShape, "shape '" + std::string(text_) + "' cancels to nothing");
    if (order == 0) return FrameShape(std::move(exps));
    return FrameShape(std::move(exps), order);
  }

 private:
  void product(FrameShape::Exponents& exps, int sign) {
    do {
      std::int64_t m = number("base");
      std::int64_t e = 1;
      if (accept('^')) e = number("exponent", /*allow_zero=*/true);
      exps[m] += sign * e;
    } while (accept('*'));
  }

  std::int64_t number(const char* what, bool allow_zero = false) {
    skip_space();
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    if (begin == end || !std::isdigit(static_cast<unsigned char>(*begin)))
      fail(std::string("expected ") + what);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{}) fail(std::string(what) + " out of range");
    pos_ += static_cast<std::size_t>(ptr - begin);
    if (v == 0 && !allow_zero) fail(std::string(what) + " must be positive");
    return v;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::Malformed,
                "frame shape '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FrameShape::FrameShape(Exponents exponents) : exps_(std::move(exponents)) {
  canonicalize(exps_);
  for (const auto& [m, e] : exps_)
    if (m <= 0) throw Error(ErrorCode::Malformed, "frame shape key must be positive");
  order_ = max_key();
}

FrameShape::FrameShape(Exponents exponents, std::int64_t order) : exps_(std::move(exponents)), order_(order) {
  canonicalize(exps_);
  if (order_ <= 0) throw Error(ErrorCode::Malformed, "frame shape order must be positive");
  for (const auto& [m, e] : exps_) {
    if (m <= 0) throw Error(ErrorCode::Malformed, "frame shape key must be positive");
    if (order_ % m != 0)
      throw Error(ErrorCode::Malformed,
                  "key " + std::to_string(m) + " does not divide order " + std::to_string(order_));
  }
}

std::int64_t FrameShape::exponent(std::int64_t m) const {
  auto it = exps_.find(m);
  return it == exps_.end() ? 0 : it->second;
}

std::string FrameShape::to_string() const {
  std::ostringstream num, den;
  auto emit = [](std::ostringstream& os, std::int64_t m, std::int64_t e) {
    if (os.tellp() > 0) os << '*';
    os << m;
    if (e != 1) os << '^' << e;
  };
  for (const auto& [m, e] : exps_) {
    if (e > 0) emit(num, m, e);
    else emit(den, m, -e);
  }
  std::string out = num.str();
  if (exps_.empty()) return out;
  if (out.empty()) out = "1^0";
  if (den.tellp() > 0) out += "/" + den.str();
  if (order_ != max_key()) out += "@" + std::to_string(order_);
  return out;
}

FrameShape parse_frame(std::string_view text) { return ShapeParser(text).parse(); }

BigInt degree(const FrameShape& pi) {
  BigInt d = 0;
  for (const auto& [m, e] : pi.exponents()) d += BigInt(m) * e;
  return d;
}

IntPolynomial to_char_poly(const FrameShape& pi) {
  IntPolynomial num = IntPolynomial::constant(1);
  IntPolynomial den = IntPolynomial::constant(1);
  for (const auto& [m, e] : pi.exponents()) {
    auto factor = IntPolynomial::power_minus_one(static_cast<std::size_t>(m));
    if (e > 0) num = num * factor.pow(static_cast<unsigned>(e));
    else den = den * factor.pow(static_cast<unsigned>(-e));
  }
  auto q = num.divide_exact(den);
  if (!q) throw Error(ErrorCode::NonPolynomial, "shape " + pi.to_string() + " is not a polynomial");
  return *q;
}

std::map<std::int64_t, std::int64_t> cyclotomic_multiplicities(const IntPolynomial& phi) {
  if (phi.is_zero() || phi.leading() != 1)
    throw Error(ErrorCode::NotCyclotomicProduct, "polynomial " + phi.to_string() + " is not monic");
  std::map<std::int64_t, std::int64_t> mult;
  IntPolynomial rest = phi;
  // totient(d) >= sqrt(d/2), so every cyclotomic factor has d <= 2·deg².
  const std::int64_t bound = 2 * static_cast<std::int64_t>(phi.degree()) * phi.degree() + 2;
  for (std::int64_t d = 1; d <= bound && rest.degree() > 0; ++d) {
    if (totient(d) > rest.degree()) continue;
    const auto cyc = IntPolynomial::cyclotomic(static_cast<std::size_t>(d));
    while (rest.degree() >= cyc.degree()) {
      auto q = rest.divide_exact(cyc);
      if (!q) break;
      rest = std::move(*q);
      ++mult[d];
    }
  }
  if (rest != IntPolynomial::constant(1))
    throw Error(ErrorCode::NotCyclotomicProduct,
                "polynomial " + phi.to_string() + " has non-cyclotomic factor " + rest.to_string());
  return mult;
}

FrameShape from_char_poly(const IntPolynomial& phi, std::int64_t h) {
  if (h <= 0) throw Error(ErrorCode::Malformed, "order must be positive");
  auto mult = cyclotomic_multiplicities(phi);
  for (const auto& [d, e] : mult)
    if (h % d != 0)
      throw Error(ErrorCode::NotCyclotomicProduct,
                  "root of order " + std::to_string(d) + " is not an " + std::to_string(h) + "-th root of unity");

  // e_d = Σ_{d | m | h} χ_m, inverted from the top of the divisor lattice down.
  const auto divs = divisors(h);
  FrameShape::Exponents chi;
  for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
    const std::int64_t m = *it;
    std::int64_t value = mult.count(m) ? mult.at(m) : 0;
    for (const auto& [k, x] : chi)
      if (k > m && k % m == 0) value -= x;
    chi[m] = value;
  }
  return FrameShape(std::move(chi), h);
}

FrameShape saito_dual(const FrameShape& pi) {
  const std::int64_t h = pi.order();
  FrameShape::Exponents dual;
  for (const auto& [m, e] : pi.exponents()) dual[h / m] = -e;
  return FrameShape(std::move(dual), h);
}

FrameShape concatenate(const FrameShape& a, const FrameShape& b) {
  FrameShape::Exponents sum = a.exponents();
  for (const auto& [m, e] : b.exponents()) sum[m] += e;
  return FrameShape(std::move(sum), lcm64(a.order(), b.order()));
}

BigInt trace_power(const FrameShape& pi, std::int64_t k) {
  if (k <= 0) throw Error(ErrorCode::Malformed, "trace power must be positive");
  BigInt t = 0;
  for (const auto& [m, e] : pi.exponents())
    if (k % m == 0) t += BigInt(m) * e;
  return t;
}

Rational product_of_keys(const FrameShape& pi) {
  BigInt num = 1, den = 1;
  for (const auto& [m, e] : pi.exponents()) {
    BigInt p = boost::multiprecision::pow(BigInt(m), static_cast<unsigned>(e > 0 ? e : -e));
    if (e > 0) num *= p;
    else den *= p;
  }
  return Rational(num, den);
}

Rational value_at_one(const FrameShape& pi) {
  // Each factor λ^m − 1 carries the root λ = 1 exactly once.
  std::int64_t net = 0;
  for (const auto& [m, e] : pi.exponents()) net += e;
  if (net > 0) return Rational(0);
  if (net < 0) throw Error(ErrorCode::PoleAtOne, "shape " + pi.to_string() + " has a pole at 1");
  return product_of_keys(pi);
}

bool is_self_dual(const FrameShape& pi) { return saito_dual(pi) == pi; }

}  // namespace strange
