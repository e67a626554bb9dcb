#include "strange/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <set>

#include "strange/error.hpp"
#include "strange/magic_square.hpp"
#include "strange/moonshine.hpp"
#include "strange/weights.hpp"

namespace strange {

namespace {

std::int64_t sign_pow(std::int64_t e) { return e % 2 == 0 ? 1 : -1; }

std::string shape_pair(const FrameShape& a, const FrameShape& b) { return a.to_string() + " vs " + b.to_string(); }

template <typename F>
void guarded(Report& rep, const std::string& name, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    rep.add(name, false, e.what());
  }
}

GramLattice lattice_of(const std::vector<std::int64_t>& arms) { return star(arms); }

std::vector<std::int64_t> sorted(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

const std::vector<SuiteInfo>& verification_suites() {
  static const std::vector<SuiteInfo> suites{
      {"arnold", "strange duality of the 14 exceptional singularities and the Milnor-Orlik shapes"},
      {"extension", "extended duality of triangle/quadrilateral ICIS and quadrilateral hypersurfaces"},
      {"lattices", "Pinkham complements, determinant formulas, standard lattices, Coxeter elements"},
      {"frames", "Frame shape round trips, involution, traces and discriminants"},
      {"eta", "Dedekind eta identity for dual shapes and eta consistency"},
      {"kobayashi", "dual weight systems from primitive weighted magic squares"},
      {"moonshine", "self-dual degree-24 search and Leech shape pairing"},
  };
  return suites;
}

Report run_suite(std::string_view name, const Catalog& catalog) {
  if (name == "all") {
    Report all;
    for (const auto& s : verification_suites()) all.append(run_suite(s.name, catalog));
    return all;
  }
  if (name == "arnold") return suite_arnold(catalog);
  if (name == "extension") return suite_extension(catalog);
  if (name == "lattices") return suite_lattices(catalog);
  if (name == "frames") return suite_frames(catalog);
  if (name == "eta") return suite_eta(catalog);
  if (name == "kobayashi") return suite_kobayashi(catalog);
  if (name == "moonshine") return suite_moonshine(catalog);
  throw Error(ErrorCode::Malformed, "unknown verification suite '" + std::string(name) + "'");
}

Report suite_arnold(const Catalog& catalog) {
  Report rep = verify_arnold(catalog);
  for (const auto* x : catalog.family(Family::ExceptionalUnimodal)) {
    const std::string& n = x->name;
    guarded(rep, n + ": Milnor number from weights", [&] {
      auto mu = milnor_number(x->weights);
      rep.add(n + ": Milnor number from weights", mu == x->mu, std::to_string(mu));
    });
    guarded(rep, n + ": Milnor-Orlik shape", [&] {
      FrameShape pi = monodromy_frame(x->weights);
      rep.add(n + ": Milnor-Orlik shape", pi == *x->frame, shape_pair(pi, *x->frame));
      rep.add(n + ": Milnor-Orlik degree = mu", degree(pi) == milnor_number(x->weights));
      rep.add(n + ": shape order is N", pi.order() == x->weights.degrees[0] && pi.exponent(pi.order()) != 0);
      rep.add(n + ": tr c = -1", trace_power(pi, 1) == -1);
      for (const auto* y : catalog.dual_of(n)) {
        FrameShape dual = saito_dual(pi);
        rep.add(n + ": Saito dual of computed shape = pi(" + y->name + ")", dual == *y->frame,
                shape_pair(dual, *y->frame));
      }
    });
    rep.add(n + ": monodromy order", monodromy_order(*x) == x->weights.degrees[0]);
  }
  return rep;
}

Report suite_extension(const Catalog& catalog) {
  Report rep = verify_extension(catalog);
  for (const auto* x : catalog.family(Family::QuadrilateralHypersurface)) {
    const std::string& n = x->name;
    guarded(rep, n + ": Milnor-Orlik shape", [&] {
      FrameShape pi = monodromy_frame(x->weights);
      rep.add(n + ": Milnor-Orlik shape", pi == *x->frame, shape_pair(pi, *x->frame));
      rep.add(n + ": Milnor number from weights", milnor_number(x->weights) == x->mu);
    });
  }
  for (const auto* x : catalog.family(Family::TriangleIcis)) {
    const std::string& n = x->name;
    rep.add(n + ": monodromy order N2", monodromy_order(*x) == x->h && x->h == x->weights.degrees[1]);
    rep.add(n + ": virtual dual order lcm(N1,N2)",
            x->series_dual && x->series_dual->h_star && virtual_dual_order(*x) == *x->series_dual->h_star);
  }
  for (const auto* x : catalog.family(Family::QuadrilateralIcis))
    rep.add(x->name + ": monodromy order N2", monodromy_order(*x) == x->weights.degrees[1]);
  return rep;
}

FixtureAnalysis analyze_fixture(const std::vector<std::vector<std::int64_t>>& gram, std::int64_t h) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= gram.size(); ++i) labels.push_back("delta" + std::to_string(i));
  GramLattice lat = make_lattice(IntMatrix(gram), std::move(labels));
  FixtureAnalysis out;
  out.gram_signature = signature(lat);
  auto report = coxeter_element(lat);
  out.char_poly = report.char_poly;
  IntPolynomial rest = report.char_poly;
  const IntPolynomial unit = IntPolynomial::power_minus_one(1);
  while (rest.degree() > 0) {
    auto q = rest.divide_exact(unit);
    if (!q) break;
    rest = *q;
    ++out.unit_multiplicity;
  }
  out.reduced_poly = rest;
  try {
    out.reduced_frame = from_char_poly(rest, h);
  } catch (const Error&) {
  }
  return out;
}

Report suite_lattices(const Catalog& catalog) {
  Report rep;
  for (const auto& x : catalog.records()) {
    const std::string& n = x.name;
    GramLattice m = lattice_of(x.dol);
    BigInt det = determinant(m);
    rep.add(n + ": rank(M(Dol)) + mu = 22", static_cast<std::int64_t>(m.rank()) + x.mu == 22);
    rep.add(n + ": |det M(Dol)| = |d|", abs(det) == std::abs(x.d), to_string(det));
    if (det != 0) {
      BigInt prod = 1;
      for (const auto& f : smith_invariants(m)) prod *= f;
      rep.add(n + ": SNF product = |det M(Dol)|", prod == abs(det));
    }
    if (x.family == Family::ExceptionalUnimodal) {
      const auto& g = x.gab_variants.front().numbers;
      BigInt dg = determinant(direct_sum(star3(g[0], g[1], g[2]), hyperbolic_u()));
      rep.add(n + ": det(M(Gab) + U) = d", dg == x.d, to_string(dg));
    }
    if (x.family == Family::QuadrilateralHypersurface) {
      BigInt dq = determinant(direct_sum(m, hyperbolic_u()));
      for (const auto* y : catalog.dual_of(n))
        rep.add(n + ": det(M(Dol) + U) = d_flat(" + y->name + ")", y->d_flat && dq == *y->d_flat, to_string(dq));
    }
    if (x.family == Family::QuadrilateralHypersurface || x.family == Family::QuadrilateralIcis) {
      for (const auto& v : x.gab_variants) {
        const std::string tag = n + ": determinant formula for (" + v.to_string() + ")";
        if (v.type == GabSymbolType::AllUnderlined) {
          bool no_formula = false;
          try {
            quad_determinant_formula(v);
          } catch (const Error& e) {
            no_formula = e.code() == ErrorCode::NoFormula;
          }
          rep.add(tag + " is absent", no_formula);
          continue;
        }
        guarded(rep, tag, [&] {
          auto f = quad_determinant_formula(v);
          rep.add(tag, f == std::abs(x.d), std::to_string(f));
        });
      }
    }
    if (x.coxeter_fixture) {
      const auto fx = analyze_fixture(*x.coxeter_fixture, x.h);
      const std::int64_t nu = x.nu.value_or(0);
      rep.add(n + ": fixture has nu generators", static_cast<std::int64_t>(x.coxeter_fixture->size()) == nu);
      rep.add(n + ": fixture char poly degree nu", fx.char_poly.degree() == nu);
      rep.add(n + ": fixture unit eigenvalue multiplicity nu - mu", fx.unit_multiplicity == nu - x.mu,
              std::to_string(fx.unit_multiplicity));
      rep.add(n + ": fixture reduced shape = pi(c)", fx.reduced_frame && x.frame && *fx.reduced_frame == *x.frame,
              (fx.reduced_frame ? fx.reduced_frame->to_string() : "not cyclotomic") + " (char poly " +
                  fx.char_poly.to_string() + ")");
      rep.add(n + ": fixture Gram kernel rank nu - mu", static_cast<std::int64_t>(fx.gram_signature.zero) == nu - x.mu,
              std::to_string(fx.gram_signature.zero));
    }
  }

  rep.add("U: det -1", determinant(hyperbolic_u()) == -1);
  rep.add("-E8: det 1", determinant(minus_e8()) == 1);
  rep.add("-E8: negative definite", signature(minus_e8()) == Signature{0, 8, 0});
  auto k3 = k3_lattice();
  rep.add("K3: rank 22, signature (3,19)", k3.rank() == 22 && signature(k3) == Signature{3, 19, 0});
  rep.add("K3: unimodular", abs(determinant(k3)) == 1);
  auto k = k24();
  rep.add("K24: rank 24, det 1", k.rank() == 24 && determinant(k) == 1);
  rep.add("K24: signature (4,20)", signature(k) == Signature{4, 20, 0});

  // Coxeter numbers of the simply-laced Dynkin diagrams.
  for (int n = 1; n <= 24; ++n) {
    auto r = coxeter_element(dynkin("A" + std::to_string(n)));
    rep.add("A" + std::to_string(n) + ": Coxeter shape (n+1)/1",
            r.frame && *r.frame == FrameShape({{1, -1}, {n + 1, 1}}) && r.order && *r.order == n + 1);
  }
  for (int n = 4; n <= 24; ++n) {
    auto r = coxeter_element(dynkin("D" + std::to_string(n)));
    rep.add("D" + std::to_string(n) + ": Coxeter order 2n-2", r.order && *r.order == 2 * n - 2);
  }
  for (auto [sym, h] : {std::pair{"E6", 12}, std::pair{"E7", 18}, std::pair{"E8", 30}}) {
    auto r = coxeter_element(dynkin(sym));
    rep.add(std::string(sym) + ": Coxeter order " + std::to_string(h), r.order && *r.order == h);
  }
  return rep;
}

namespace {

std::vector<std::pair<std::string, FrameShape>> all_catalog_shapes(const Catalog& catalog) {
  std::vector<std::pair<std::string, FrameShape>> out;
  for (const auto& r : catalog.records()) {
    if (r.frame) out.emplace_back(r.name + " pi", *r.frame);
    if (r.frame_flat) out.emplace_back(r.name + " pi_flat", *r.frame_flat);
  }
  for (const auto& row : catalog.table8()) out.emplace_back("leech " + row.atlas_label, row.frame);
  for (const auto& k : catalog.kondo_extras()) out.emplace_back("extra " + k.class_label, k.frame);
  return out;
}

}  // namespace

Report suite_frames(const Catalog& catalog) {
  Report rep;
  for (const auto& [label, pi] : all_catalog_shapes(catalog)) {
    // Two of the extra search results are rational functions with poles at
    // roots of unity, not characteristic polynomials; they have no round trip.
    std::optional<IntPolynomial> phi;
    try {
      phi = to_char_poly(pi);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NonPolynomial || label.rfind("extra ", 0) != 0) rep.add(label + ": round trip", false, e.what());
    }
    if (phi) {
      guarded(rep, label + ": round trip", [&, &label = label, &pi = pi] {
        FrameShape back = from_char_poly(*phi, pi.order());
        rep.add(label + ": round trip", back == pi, back.to_string());
      });
    }
    rep.add(label + ": dual involution", saito_dual(saito_dual(pi)) == pi);
    rep.add(label + ": concatenation additive",
            degree(concatenate(pi, saito_dual(pi))) == degree(pi) + degree(saito_dual(pi)));
    rep.add(label + ": tr c^h = deg", trace_power(pi, pi.order()) == degree(pi));
    std::int64_t sum = 0;
    for (const auto& [m, chi] : pi.exponents()) sum += chi;
    if (sum == 0) rep.add(label + ": phi(1) = prod m^chi", value_at_one(pi) == product_of_keys(pi));
  }
  for (const auto& r : catalog.records()) {
    if (r.frame) {
      guarded(rep, r.name + ": (-1)^mu phi(1) = d", [&] {
        Rational v = value_at_one(*r.frame) * sign_pow(r.mu);
        rep.add(r.name + ": (-1)^mu phi(1) = d", v == r.d, to_string(v));
      });
      if (r.is_hypersurface()) rep.add(r.name + ": tr c = -1", trace_power(*r.frame, 1) == -1);
    }
    if (r.frame_flat) {
      guarded(rep, r.name + ": (-1)^mu_flat phi_flat(1) = d_flat", [&] {
        Rational v = value_at_one(*r.frame_flat) * sign_pow(*r.mu_flat);
        rep.add(r.name + ": (-1)^mu_flat phi_flat(1) = d_flat", v == *r.d_flat, to_string(v));
      });
      rep.add(r.name + ": tr c_flat = -2", trace_power(*r.frame_flat, 1) == -2);
    }
  }
  return rep;
}

std::vector<UpperHalfPoint> eta_sample_points() {
  return {UpperHalfPoint(0, 1), UpperHalfPoint(0.3, 1.7), UpperHalfPoint(-0.4, 0.9), UpperHalfPoint(0.1, 1.2),
          UpperHalfPoint(0.45, 0.6)};
}

std::vector<std::pair<std::string, FrameShape>> extension_shapes(const Catalog& catalog) {
  std::vector<std::pair<std::string, FrameShape>> out;
  std::set<FrameShape> seen;
  auto add = [&](const std::string& label, const FrameShape& pi) {
    if (seen.insert(pi).second) out.emplace_back(label, pi);
  };
  for (const auto& r : catalog.records()) {
    if (r.family == Family::ExceptionalUnimodal) continue;
    if (r.frame) add(r.name + " pi", *r.frame);
    if (r.frame_flat) add(r.name + " pi_flat", *r.frame_flat);
  }
  return out;
}

Report suite_eta(const Catalog& catalog) {
  Report rep;
  constexpr double kTol = 1e-8;
  std::vector<std::pair<std::string, FrameShape>> shapes;
  for (const auto* x : catalog.family(Family::ExceptionalUnimodal)) shapes.emplace_back(x->name + " pi", *x->frame);
  for (auto& s : extension_shapes(catalog)) shapes.push_back(std::move(s));
  const auto points = eta_sample_points();
  for (const auto& [label, pi] : shapes) {
    if (product_of_keys(pi) <= 0) continue;
    for (const auto& tau : points) {
      const std::string tag = label + ": Saito eta identity at " + std::to_string(tau.re()) + "+" +
                              std::to_string(tau.im()) + "i";
      guarded(rep, tag, [&, &pi = pi] {
        double r = saito_identity_residual(pi, tau);
        rep.add(tag, r < kTol, "residual " + std::to_string(r));
      });
    }
  }
  for (const auto& [label, pi] : all_catalog_shapes(catalog)) {
    const UpperHalfPoint tau(0.2, 1.1);
    const UpperHalfPoint shifted(1.2, 1.1);
    const auto phase = std::exp(2.0 * std::numbers::pi * std::complex<double>(0, 1) *
                                (static_cast<double>(degree(pi)) / 24.0));
    const auto a = eta_product(pi, shifted);
    const auto b = phase * eta_product(pi, tau);
    rep.add(label + ": eta periodicity phase", std::abs(a - b) <= 1e-9 * std::abs(b));
  }
  for (const auto& tau : points) {
    const double p = std::pow(std::abs(eta(tau)), 24);
    const double s = std::pow(std::abs(eta_pentagonal(tau)), 24);
    rep.add("|eta|^24 product vs pentagonal series at " + std::to_string(tau.re()) + "+" +
                std::to_string(tau.im()) + "i",
            std::abs(p - s) <= 1e-9 * s);
  }
  const double closed = std::tgamma(0.25) / (2.0 * std::pow(std::numbers::pi, 0.75));
  rep.add("eta(i) closed form", std::abs(eta(UpperHalfPoint(0, 1)) - closed) < 1e-12);
  return rep;
}

Report suite_kobayashi(const Catalog& catalog) {
  Report rep;
  for (const auto* x : catalog.family(Family::ExceptionalUnimodal)) {
    const auto duals = enumerate_duals(x->weights);
    for (const auto* y : catalog.dual_of(x->name)) {
      const bool exact = duals.size() == 1 && duals[0].weights == sorted(y->weights.weights) &&
                         duals[0].degrees == y->weights.degrees;
      std::string found;
      for (const auto& d : duals) found += (found.empty() ? "" : " | ") + d.to_string();
      rep.add(x->name + ": unique dual weight system is W(" + y->name + ")", exact, found);
      const auto squares = find_magic_squares(x->weights, y->weights, true);
      rep.add(x->name + ": primitive square with W(" + y->name + ") exists", !squares.empty());
      bool transposes = true;
      for (const auto& s : squares)
        transposes = transposes && is_magic(transpose(s.entries), y->weights, x->weights) &&
                     is_primitive(transpose(s.entries), y->weights, x->weights);
      rep.add(x->name + ": transposed squares are magic for (W*, W)", transposes);
    }
  }
  return rep;
}

Report suite_moonshine(const Catalog& catalog) {
  Report rep;
  const auto found = search_sequences(119);
  rep.add("search N <= 119: 25 shapes", found.size() == 25, std::to_string(found.size()));
  std::set<FrameShape> expected;
  for (const auto& row : catalog.table8()) expected.insert(row.frame);
  for (const auto& k : catalog.kondo_extras()) expected.insert(k.frame);
  std::set<FrameShape> got(found.begin(), found.end());
  rep.add("search N <= 119: the Leech shape table plus the three extras", got == expected);
  for (const auto& pi : found) {
    auto t = trace_power(pi, 1);
    rep.add(pi.to_string() + ": self-dual, degree 24, trace",
            is_self_dual(pi) && degree(pi) == 24 && (t == -2 || t == -3 || t == -4));
  }
  rep.append(classify_pairings(catalog).checks);
  return rep;
}

}  // namespace strange
