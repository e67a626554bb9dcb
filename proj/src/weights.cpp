#include "strange/weights.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

#include "strange/error.hpp"
#include "strange/record.hpp"

namespace strange {

namespace {

std::vector<std::int64_t> parse_list(std::string_view text, std::string_view whole) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc{} || v <= 0)
      throw Error(ErrorCode::Malformed, "weight system '" + std::string(whole) + "': expected positive integer");
    out.push_back(v);
    pos = static_cast<std::size_t>(ptr - text.data());
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos == text.size()) break;
    if (text[pos] != ',')
      throw Error(ErrorCode::Malformed, "weight system '" + std::string(whole) + "': expected ','");
    ++pos;
  }
  return out;
}

void require_hypersurface3(const WeightSystem& w) {
  if (w.weights.size() != 3 || w.degrees.size() != 1)
    throw Error(ErrorCode::WrongClass, "expected three weights and one degree, got " + w.to_string());
}

}  // namespace

bool WeightSystem::is_reduced() const {
  std::int64_t g = 0;
  for (auto x : weights) g = std::gcd(g, x);
  return g == 1;
}

bool WeightSystem::degrees_representable() const {
  return std::all_of(degrees.begin(), degrees.end(), [&](std::int64_t n) { return representable(n, weights); });
}

std::int64_t WeightSystem::magic_degree() const {
  return std::accumulate(degrees.begin(), degrees.end(), std::int64_t{0});
}

std::string WeightSystem::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < weights.size(); ++i) os << (i ? "," : "") << weights[i];
  os << ';';
  for (std::size_t i = 0; i < degrees.size(); ++i) os << (i ? "," : "") << degrees[i];
  return os.str();
}

WeightSystem parse_weight_system(std::string_view text) {
  auto semi = text.find(';');
  if (semi == std::string_view::npos)
    throw Error(ErrorCode::Malformed, "weight system '" + std::string(text) + "': missing ';'");
  WeightSystem w{parse_list(text.substr(0, semi), text), parse_list(text.substr(semi + 1), text)};
  if (w.weights.size() < 3 || w.weights.size() > 4 || w.degrees.empty() || w.degrees.size() > 2)
    throw Error(ErrorCode::Malformed, "weight system '" + std::string(text) + "': wrong number of entries");
  return w;
}

bool representable(std::int64_t n, const std::vector<std::int64_t>& weights) {
  if (n < 0) return false;
  std::vector<char> reach(static_cast<std::size_t>(n) + 1, 0);
  reach[0] = 1;
  for (std::int64_t v = 1; v <= n; ++v)
    for (auto w : weights)
      if (w <= v && reach[static_cast<std::size_t>(v - w)]) {
        reach[static_cast<std::size_t>(v)] = 1;
        break;
      }
  return reach[static_cast<std::size_t>(n)] != 0;
}

std::int64_t milnor_number(const WeightSystem& w) {
  require_hypersurface3(w);
  const std::int64_t n = w.degrees[0];
  BigInt num = 1, den = 1;
  for (auto wi : w.weights) {
    num *= (n - wi);
    den *= wi;
  }
  if (num % den != 0)
    throw Error(ErrorCode::NonIntegerMilnorNumber, "weight system " + w.to_string() + " gives non-integral μ");
  BigInt mu = num / den;
  if (mu <= 0) throw Error(ErrorCode::DegenerateWeightSystem, "weight system " + w.to_string() + " gives μ = " + mu.str());
  return mu.convert_to<std::int64_t>();
}

FrameShape monodromy_frame(const WeightSystem& w) {
  require_hypersurface3(w);
  if (!w.is_reduced())
    throw Error(ErrorCode::DegenerateWeightSystem, "weight system " + w.to_string() + " is not reduced");
  const std::int64_t n = w.degrees[0];

  // Elements of the ring ℚ[Λ_m] as coefficient maps.
  using Divisor = std::map<std::int64_t, Rational>;
  Divisor acc{{1, Rational(1)}};
  for (auto wi : w.weights) {
    const std::int64_t g = std::gcd(wi, n);
    const std::int64_t u = wi / g;
    const std::int64_t v = n / g;
    const Divisor factor{{v, Rational(1, u)}};
    Divisor next;
    for (const auto& [a, ca] : acc) {
      for (const auto& [b, cb] : factor) next[std::lcm(a, b)] += ca * cb * std::gcd(a, b);
      next[a] -= ca;
    }
    acc = std::move(next);
  }

  FrameShape::Exponents chi;
  for (const auto& [m, c] : acc) {
    if (c == 0) continue;
    if (boost::multiprecision::denominator(c) != 1)
      throw Error(ErrorCode::NonIntegralExponent,
                  "weight system " + w.to_string() + " leaves χ_" + std::to_string(m) + " = " + strange::to_string(c));
    chi[m] = boost::multiprecision::numerator(c).convert_to<std::int64_t>();
  }
  FrameShape shape(std::move(chi), n);
  if (shape.is_empty())
    throw Error(ErrorCode::DegenerateWeightSystem, "weight system " + w.to_string() + " has trivial monodromy");
  return shape;
}

std::int64_t monodromy_order(const SingularityRecord& record) { return record.weights.degrees.back(); }

std::int64_t virtual_dual_order(const SingularityRecord& record) {
  if (record.family != Family::TriangleIcis)
    throw Error(ErrorCode::WrongClass, record.name + " is not a triangle ICIS");
  return std::lcm(record.weights.degrees[0], record.weights.degrees[1]);
}

}  // namespace strange
