#include "strange/moonshine.hpp"

#include <algorithm>
#include <set>

#include "strange/lattice.hpp"

namespace strange {

namespace {

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t m = 1; m <= n; ++m)
    if (n % m == 0) out.push_back(m);
  return out;
}

void search_n(std::int64_t n, std::vector<FrameShape>& out) {
  const auto divs = divisors(n);
  std::vector<std::int64_t> free;  // divisors strictly between 1 and √N
  for (auto m : divs)
    if (m > 1 && m * m < n) free.push_back(m);
  for (std::int64_t chi1 : {-2, -3, -4}) {
    const std::int64_t bound = -chi1;
    std::vector<std::int64_t> chi(free.size(), -bound);
    while (true) {
      // χ_m paired with χ_{N/m} = −χ_m contributes (m − N/m)·χ_m.
      std::int64_t deg = (1 - n) * chi1;
      for (std::size_t i = 0; i < free.size(); ++i) deg += (free[i] - n / free[i]) * chi[i];
      if (deg == 24 && n > 1) {
        FrameShape::Exponents e{{1, chi1}, {n, -chi1}};
        for (std::size_t i = 0; i < free.size(); ++i) {
          if (chi[i] == 0) continue;
          e[free[i]] = chi[i];
          e[n / free[i]] = -chi[i];
        }
        FrameShape pi(e, n);
        Rational p = product_of_keys(pi);
        if (denominator(p) == 1 && p >= 1) out.push_back(std::move(pi));
      }
      std::size_t i = 0;
      while (i < chi.size() && chi[i] == bound) chi[i++] = -bound;
      if (i == chi.size()) break;
      ++chi[i];
    }
  }
}

}  // namespace

std::vector<FrameShape> search_sequences(std::int64_t max_n) {
  std::vector<FrameShape> out;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    std::vector<FrameShape> here;
    search_n(n, here);
    std::sort(here.begin(), here.end(),
              [](const FrameShape& a, const FrameShape& b) { return a.exponents() < b.exponents(); });
    here.erase(std::unique(here.begin(), here.end()), here.end());
    out.insert(out.end(), here.begin(), here.end());
  }
  return out;
}

std::vector<SearchHit> label_search(const Catalog& catalog, std::int64_t max_n) {
  std::vector<SearchHit> out;
  for (auto& pi : search_sequences(max_n)) {
    SearchHit hit{pi, std::nullopt, std::nullopt};
    if (auto row = catalog.table8_match(pi)) hit.table8_label = row->atlas_label;
    for (const auto& k : catalog.kondo_extras())
      if (k.frame == pi) hit.extra_class = k.class_label;
    out.push_back(std::move(hit));
  }
  return out;
}

PairingReport classify_pairings(const Catalog& catalog) {
  PairingReport rep;
  std::set<std::string> matched;
  for (const auto& [a, b] : catalog.dual_pairs()) {
    const auto& ra = catalog.lookup(a);
    const auto& rb = catalog.lookup(b);
    FrameShape pp = concatenate(ra.duality_shape(), rb.duality_shape());
    const std::string tag = a + " <-> " + b;
    auto row = catalog.table8_match(pp);
    rep.checks.add(tag + ": degree 24", degree(pp) == 24, pp.to_string());
    rep.checks.add(tag + ": self-dual", is_self_dual(pp));
    auto t = trace_power(pp, 1);
    rep.checks.add(tag + ": chi_1 in {-2,-3,-4}", t == -2 || t == -3 || t == -4, to_string(t));
    rep.checks.add(tag + ": in the Leech shape table", row.has_value());
    Pairing p{a, b, pp, std::nullopt};
    if (row) {
      p.table8_label = row->atlas_label;
      matched.insert(row->atlas_label);
    }
    rep.pairings.push_back(std::move(p));
  }
  for (const auto& row : catalog.table8()) {
    if (!matched.count(row.atlas_label)) rep.unmatched_rows.push_back(row.atlas_label);
    if (row.niemeier.empty()) continue;
    FrameShape cox = coxeter_frame_of_root_system(row.niemeier);
    rep.checks.add("row " + row.atlas_label + ": Niemeier Coxeter shape", cox == row.frame,
                   cox.to_string() + " vs " + row.frame.to_string());
  }
  const std::vector<std::string> expected{"10A", "15A", "12A"};
  rep.checks.add("unmatched rows are 10A, 15A, 12A", rep.unmatched_rows == expected,
                 [&] {
                   std::string s;
                   for (const auto& u : rep.unmatched_rows) s += (s.empty() ? "" : ", ") + u;
                   return s;
                 }());
  return rep;
}

}  // namespace strange
