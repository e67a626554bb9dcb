#include "strange/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "catalog_data.hpp"
#include "strange/error.hpp"
#include "strange/lattice.hpp"

namespace strange {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorCode::InvalidCatalog, msg); }

template <typename T>
T field(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) invalid(where + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    invalid(where + ": field '" + key + "': " + e.what());
  }
}

template <typename T>
std::optional<T> opt_field(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return field<T>(j, key, where);
}

FrameShape shape_field(const json& j, const char* key, const std::string& where) {
  auto text = field<std::string>(j, key, where);
  try {
    return parse_frame(text);
  } catch (const Error& e) {
    invalid(where + ": " + key + ": " + e.what());
  }
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::vector<std::int64_t> sorted(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::int64_t sign_pow(std::int64_t e) { return e % 2 == 0 ? 1 : -1; }

bool valid_trace(const BigInt& t) { return t == -2 || t == -3 || t == -4; }

std::size_t expected_dol_arity(Family f) {
  return (f == Family::ExceptionalUnimodal || f == Family::TriangleIcis) ? 3 : 4;
}

std::size_t expected_gab_arity(Family f) {
  return (f == Family::ExceptionalUnimodal || f == Family::QuadrilateralHypersurface) ? 3 : 4;
}

}  // namespace

GabVariant parse_gab_variant(std::string_view text) {
  GabVariant v;
  std::istringstream in{std::string(text)};
  std::string tok;
  std::size_t i = 0;
  while (in >> tok) {
    bool under = tok.size() >= 3 && tok.front() == '_' && tok.back() == '_';
    std::string digits = under ? tok.substr(1, tok.size() - 2) : tok;
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw Error(ErrorCode::Malformed, "Gabrielov symbol '" + std::string(text) + "'");
    v.numbers.push_back(std::stoll(digits));
    if (under) v.underline_mask |= 1U << i;
    ++i;
  }
  if (v.numbers.size() != 3 && v.numbers.size() != 4)
    throw Error(ErrorCode::Malformed, "Gabrielov symbol '" + std::string(text) + "' needs 3 or 4 entries");
  v.type = classify_gab_symbol(v.numbers.size(), v.underline_mask);
  return v;
}

std::int64_t quad_determinant_formula(const GabVariant& v) {
  const auto& p = v.numbers;
  switch (v.type) {
    case GabSymbolType::HypersurfaceOne:
      return 4 * (p[0] * p[1] - p[0] - p[1]);
    case GabSymbolType::HypersurfaceTwo:
      return (p[0] - 1) * (p[1] + p[2]);
    case GabSymbolType::IcisOne:
      return 4 * (p[0] * p[1] * p[2] - p[0] - p[2]);
    case GabSymbolType::IcisTwo:
      return p[0] * p[1] * (p[2] + p[3] + 2) - p[0] - p[1] - p[2] - p[3];
    case GabSymbolType::IcisThree:
      return p[0] * p[2] * (p[1] + p[3]);
    case GabSymbolType::Plain:
    case GabSymbolType::AllUnderlined:
      break;
  }
  throw Error(ErrorCode::NoFormula, "no determinant formula for symbol (" + v.to_string() + ")");
}

SingularityRecord record_from_json(const json& j) {
  if (!j.is_object()) invalid("singularity entry is not an object");
  SingularityRecord r;
  r.name = field<std::string>(j, "name", "singularity");
  const std::string& w = r.name;
  try {
    r.family = parse_family(field<std::string>(j, "family", w));
  } catch (const Error& e) {
    invalid(w + ": " + e.what());
  }
  r.equations = field<std::vector<std::string>>(j, "equations", w);
  r.weights.weights = field<std::vector<std::int64_t>>(j, "weights", w);
  r.weights.degrees = field<std::vector<std::int64_t>>(j, "degrees", w);
  r.dol = field<std::vector<std::int64_t>>(j, "dol", w);
  for (const auto& g : field<std::vector<std::string>>(j, "gab", w)) {
    try {
      r.gab_variants.push_back(parse_gab_variant(g));
    } catch (const Error& e) {
      invalid(w + ": " + e.what());
    }
  }
  r.mu = field<std::int64_t>(j, "mu", w);
  r.d = field<std::int64_t>(j, "d", w);
  r.mu1 = opt_field<std::int64_t>(j, "mu1", w);
  r.nu = opt_field<std::int64_t>(j, "nu", w);
  r.mu_flat = opt_field<std::int64_t>(j, "mu_flat", w);
  r.d_flat = opt_field<std::int64_t>(j, "d_flat", w);
  r.discriminant_form = opt_field<std::string>(j, "discriminant_form", w);
  r.dual_discriminant_form = opt_field<std::string>(j, "dual_discriminant_form", w);
  r.restrictions = opt_field<std::string>(j, "restrictions", w);
  if (j.contains("frame")) r.frame = shape_field(j, "frame", w);
  if (j.contains("frame_flat")) r.frame_flat = shape_field(j, "frame_flat", w);
  r.h = field<std::int64_t>(j, "h", w);
  try {
    if (r.frame) r.frame = FrameShape(r.frame->exponents(), r.h);
    if (r.frame_flat) r.frame_flat = FrameShape(r.frame_flat->exponents(), r.h);
  } catch (const Error& e) {
    invalid(w + ": frame keys must divide h: " + e.what());
  }
  r.duals = field<std::vector<std::string>>(j, "duals", w);
  if (j.contains("series_dual")) {
    const auto& s = j.at("series_dual");
    SeriesDual sd;
    sd.names = field<std::vector<std::string>>(s, "names", w + ".series_dual");
    sd.h_star = opt_field<std::int64_t>(s, "h_star", w + ".series_dual");
    sd.mu_star = field<std::int64_t>(s, "mu_star", w + ".series_dual");
    r.series_dual = sd;
  }
  r.coxeter_fixture = opt_field<std::vector<std::vector<std::int64_t>>>(j, "coxeter_fixture", w);
  return r;
}

json record_to_json(const SingularityRecord& r) {
  json j;
  j["name"] = r.name;
  j["family"] = std::string(to_string(r.family));
  j["equations"] = r.equations;
  if (r.restrictions) j["restrictions"] = *r.restrictions;
  j["weights"] = r.weights.weights;
  j["degrees"] = r.weights.degrees;
  j["dol"] = r.dol;
  json gab = json::array();
  for (const auto& g : r.gab_variants) gab.push_back(g.to_string());
  j["gab"] = gab;
  j["mu"] = r.mu;
  if (r.mu1) j["mu1"] = *r.mu1;
  if (r.nu) j["nu"] = *r.nu;
  j["d"] = r.d;
  if (r.mu_flat) j["mu_flat"] = *r.mu_flat;
  if (r.d_flat) j["d_flat"] = *r.d_flat;
  if (r.discriminant_form) j["discriminant_form"] = *r.discriminant_form;
  if (r.dual_discriminant_form) j["dual_discriminant_form"] = *r.dual_discriminant_form;
  if (r.frame) j["frame"] = r.frame->to_string();
  if (r.frame_flat) j["frame_flat"] = r.frame_flat->to_string();
  j["h"] = r.h;
  j["duals"] = r.duals;
  if (r.series_dual) {
    json s;
    s["names"] = r.series_dual->names;
    if (r.series_dual->h_star) s["h_star"] = *r.series_dual->h_star;
    s["mu_star"] = r.series_dual->mu_star;
    j["series_dual"] = s;
  }
  if (r.coxeter_fixture) j["coxeter_fixture"] = *r.coxeter_fixture;
  return j;
}

json table8_row_to_json(const Table8Row& row) {
  json j;
  j["atlas"] = row.atlas_label;
  j["frame"] = row.frame.to_string();
  j["mukai_star"] = row.mukai_star;
  std::string nie;
  for (std::size_t i = 0; i < row.niemeier.size(); ++i) nie += (i ? "+" : "") + row.niemeier[i];
  j["niemeier"] = nie;
  json pairs = json::array();
  for (const auto& [a, b] : row.duality_pairs) pairs.push_back({a, b});
  j["duality"] = pairs;
  return j;
}

Catalog Catalog::from_json(const json& doc) {
  if (!doc.is_object()) invalid("top level is not an object");
  Catalog c;
  c.schema_version_ = field<int>(doc, "schema_version", "catalog");
  if (c.schema_version_ != 1) invalid("unsupported schema_version " + std::to_string(c.schema_version_));
  for (const auto& s : field<json>(doc, "singularities", "catalog")) c.records_.push_back(record_from_json(s));
  for (const auto& t : field<json>(doc, "table8", "catalog")) {
    Table8Row row;
    row.atlas_label = field<std::string>(t, "atlas", "table8");
    const std::string where = "leech " + row.atlas_label;
    row.frame = shape_field(t, "frame", where);
    row.mukai_star = field<bool>(t, "mukai_star", where);
    auto nie = field<std::string>(t, "niemeier", where);
    if (!nie.empty()) {
      try {
        row.niemeier = parse_root_system(nie);
      } catch (const Error& e) {
        invalid(where + ": " + e.what());
      }
    }
    for (const auto& p : field<std::vector<std::vector<std::string>>>(t, "duality", where)) {
      if (p.size() != 2) invalid(where + ": duality entries are name pairs");
      row.duality_pairs.emplace_back(p[0], p[1]);
    }
    c.table8_.push_back(std::move(row));
  }
  for (const auto& k : field<json>(doc, "kondo_extras", "catalog"))
    c.kondo_.push_back({shape_field(k, "frame", "kondo_extras"), field<std::string>(k, "class_label", "kondo_extras")});

  Report rep = c.validate();
  for (const auto& ch : rep.checks)
    if (!ch.passed) invalid(ch.name + (ch.detail.empty() ? "" : ": " + ch.detail));
  return c;
}

Catalog Catalog::from_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    invalid(std::string("not valid JSON: ") + e.what());
  }
  return from_json(doc);
}

Catalog Catalog::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) invalid("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_text(ss.str());
}

const Catalog& Catalog::builtin() {
  static const Catalog instance = from_text(kBuiltinCatalog);
  return instance;
}

const SingularityRecord* Catalog::find(std::string_view name) const {
  for (const auto& r : records_)
    if (r.name == name) return &r;
  return nullptr;
}

const SingularityRecord& Catalog::lookup(std::string_view name) const {
  if (const auto* r = find(name)) return *r;
  throw Error(ErrorCode::UnknownName, "no singularity named '" + std::string(name) + "'");
}

std::vector<const SingularityRecord*> Catalog::dual_of(std::string_view name) const {
  std::vector<const SingularityRecord*> out;
  for (const auto& n : lookup(name).duals) out.push_back(&lookup(n));
  return out;
}

std::vector<const SingularityRecord*> Catalog::family(Family f) const {
  std::vector<const SingularityRecord*> out;
  for (const auto& r : records_)
    if (r.family == f) out.push_back(&r);
  return out;
}

std::vector<std::pair<std::string, std::string>> Catalog::dual_pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& r : records_) {
    for (const auto& d : r.duals) {
      auto key = std::minmax(r.name, d);
      if (seen.insert({key.first, key.second}).second) out.emplace_back(r.name, d);
    }
  }
  return out;
}

std::optional<Table8Row> Catalog::table8_match(const FrameShape& pi) const {
  for (const auto& row : table8_)
    if (row.frame == pi) return row;
  return std::nullopt;
}

Report Catalog::validate() const {
  Report rep;
  std::set<std::string> names;
  for (const auto& r : records_) {
    const std::string& n = r.name;
    rep.add(n + ": unique name", names.insert(n).second);
    const bool icis = r.is_icis();
    rep.add(n + ": weight count", r.weights.weights.size() == (icis ? 4U : 3U), r.weights.to_string());
    rep.add(n + ": degree count", r.weights.degrees.size() == (icis ? 2U : 1U), r.weights.to_string());
    rep.add(n + ": degrees in weight semigroup", r.weights.degrees_representable(), r.weights.to_string());
    rep.add(n + ": Dolgachev arity", r.dol.size() == expected_dol_arity(r.family), join(r.dol));
    bool gab_ok = !r.gab_variants.empty();
    for (const auto& g : r.gab_variants) gab_ok = gab_ok && g.numbers.size() == expected_gab_arity(r.family);
    rep.add(n + ": Gabrielov arity", gab_ok);
    rep.add(n + ": rank(star(Dol)) + mu = 22",
            [&] {
              std::int64_t rank = 1;
              for (auto b : r.dol) rank += b - 1;
              return rank + r.mu == 22;
            }());
    rep.add(n + ": h is the monodromy order", !r.weights.degrees.empty() && r.h == r.weights.degrees.back());

    if (r.frame) {
      auto deg = degree(*r.frame);
      rep.add(n + ": mu = deg(frame)", deg == r.mu, "deg " + to_string(deg));
      try {
        Rational v = value_at_one(*r.frame);
        rep.add(n + ": (-1)^mu phi(1) = d", v * sign_pow(r.mu) == r.d, "phi(1) = " + to_string(v));
      } catch (const Error& e) {
        rep.add(n + ": (-1)^mu phi(1) = d", false, e.what());
      }
    }
    if (icis) {
      bool has = r.mu1 && r.nu && r.mu_flat && r.d_flat && r.frame_flat;
      rep.add(n + ": complete intersection data present", has);
      if (!has) continue;
      rep.add(n + ": nu = mu + mu1", *r.nu == r.mu + *r.mu1);
      rep.add(n + ": mu_flat = mu - 1", *r.mu_flat == r.mu - 1);
      auto deg = degree(*r.frame_flat);
      rep.add(n + ": mu_flat = deg(frame_flat)", deg == *r.mu_flat, "deg " + to_string(deg));
      try {
        Rational v = value_at_one(*r.frame_flat);
        rep.add(n + ": (-1)^mu_flat phi_flat(1) = d_flat", v * sign_pow(*r.mu_flat) == *r.d_flat,
                "phi_flat(1) = " + to_string(v));
      } catch (const Error& e) {
        rep.add(n + ": (-1)^mu_flat phi_flat(1) = d_flat", false, e.what());
      }
    } else {
      rep.add(n + ": hypersurface has a frame", r.frame.has_value());
    }
    if (r.family == Family::TriangleIcis) {
      bool ok = r.series_dual && r.series_dual->h_star &&
                *r.series_dual->h_star == lcm64(r.weights.degrees[0], r.weights.degrees[1]);
      rep.add(n + ": h* = lcm(N1, N2)", ok);
    }
    for (const auto& d : r.duals) {
      const auto* other = find(d);
      rep.add(n + ": dual " + d + " exists", other != nullptr);
      if (other)
        rep.add(n + ": dual " + d + " is symmetric",
                std::find(other->duals.begin(), other->duals.end(), n) != other->duals.end());
    }
  }
  if (names.size() != records_.size()) return rep;

  std::set<std::string> matched_rows;
  for (const auto& [a, b] : dual_pairs()) {
    const auto* ra = find(a);
    const auto* rb = find(b);
    if (!ra || !rb || (ra->is_icis() ? !ra->frame_flat : !ra->frame) || (rb->is_icis() ? !rb->frame_flat : !rb->frame))
      continue;
    FrameShape pp = concatenate(ra->duality_shape(), rb->duality_shape());
    auto row = table8_match(pp);
    std::string tag = a + " <-> " + b;
    rep.add(tag + ": pi pi* in the Leech shape table", row.has_value(), pp.to_string());
    if (!row) continue;
    bool listed = std::any_of(row->duality_pairs.begin(), row->duality_pairs.end(), [&](const auto& p) {
      return (p.first == a && p.second == b) || (p.first == b && p.second == a);
    });
    rep.add(tag + ": listed in row " + row->atlas_label, listed);
    matched_rows.insert(row->atlas_label);
  }
  std::size_t empty_rows = 0;
  for (const auto& row : table8_) {
    const std::string tag = "leech " + row.atlas_label;
    rep.add(tag + ": degree 24", degree(row.frame) == 24);
    rep.add(tag + ": self-dual", is_self_dual(row.frame));
    rep.add(tag + ": trace in {-2,-3,-4}", valid_trace(trace_power(row.frame, 1)));
    for (const auto& [a, b] : row.duality_pairs) rep.add(tag + ": names " + a + ", " + b + " known", find(a) && find(b));
    if (row.duality_pairs.empty()) ++empty_rows;
    else rep.add(tag + ": its pairs reproduce the frame", matched_rows.count(row.atlas_label) == 1);
  }
  rep.add("leech table: exactly 3 rows without duality", empty_rows == 3, std::to_string(empty_rows));
  for (const auto& k : kondo_) {
    rep.add("extra " + k.frame.to_string() + ": degree 24", degree(k.frame) == 24);
    rep.add("extra " + k.frame.to_string() + ": self-dual", is_self_dual(k.frame));
    rep.add("extra " + k.frame.to_string() + ": not in the Leech shape table", !table8_match(k.frame));
  }
  return rep;
}

Report verify_arnold(const Catalog& catalog) {
  Report rep;
  for (const auto* x : catalog.family(Family::ExceptionalUnimodal)) {
    for (const auto* y : catalog.dual_of(x->name)) {
      const std::string tag = x->name + " -> " + y->name;
      rep.add(tag + ": dual is exceptional", y->family == Family::ExceptionalUnimodal);
      rep.add(tag + ": Dol(X) = Gab(X*)", x->dol == y->gab_variants.front().numbers,
              join(x->dol) + " vs " + join(y->gab_variants.front().numbers));
      rep.add(tag + ": Gab(X) = Dol(X*)", x->gab_variants.front().numbers == y->dol,
              join(x->gab_variants.front().numbers) + " vs " + join(y->dol));
      rep.add(tag + ": N = N*", x->weights.degrees == y->weights.degrees);
      rep.add(tag + ": mu + mu* = 24", x->mu + y->mu == 24, std::to_string(x->mu + y->mu));
      rep.add(tag + ": d = d*", x->d == y->d);
      rep.add(tag + ": pi* = pi(X*)", saito_dual(*x->frame) == *y->frame,
              saito_dual(*x->frame).to_string() + " vs " + y->frame->to_string());
    }
  }
  return rep;
}

Report verify_extension(const Catalog& catalog) {
  Report rep;
  auto gab_multisets_contain = [](const SingularityRecord& r, const std::vector<std::int64_t>& target) {
    return std::any_of(r.gab_variants.begin(), r.gab_variants.end(),
                       [&](const GabVariant& g) { return sorted(g.numbers) == sorted(target); });
  };
  for (const auto& x : catalog.records()) {
    if (!x.is_icis()) continue;
    for (const auto* y : catalog.dual_of(x.name)) {
      const std::string tag = x.name + " -> " + y->name;
      const bool quad = x.family == Family::QuadrilateralIcis;
      if (quad) {
        rep.add(tag + ": dual is a quadrilateral ICIS", y->family == Family::QuadrilateralIcis);
        rep.add(tag + ": mu + mu* = 26", x.mu + y->mu == 26, std::to_string(x.mu + y->mu));
      } else {
        rep.add(tag + ": dual is a quadrilateral hypersurface", y->family == Family::QuadrilateralHypersurface);
        rep.add(tag + ": mu + mu* = 25", x.mu + y->mu == 25, std::to_string(x.mu + y->mu));
      }
      rep.add(tag + ": reduced mu + mu* = 24", x.duality_mu() + y->duality_mu() == 24);
      rep.add(tag + ": reduced d = d*", x.duality_d() == y->duality_d(),
              std::to_string(x.duality_d()) + " vs " + std::to_string(y->duality_d()));
      rep.add(tag + ": Dol(X) = Gab(X*) as multisets", gab_multisets_contain(*y, x.dol));
      rep.add(tag + ": Gab(X) = Dol(X*) as multisets", gab_multisets_contain(x, y->dol));
      FrameShape pstar = saito_dual(y->duality_shape());
      rep.add(tag + ": pi(X*)* = pi_flat(X)", pstar == x.duality_shape(),
              pstar.to_string() + " vs " + x.duality_shape().to_string());
      rep.add(tag + ": tr c_flat = -2", trace_power(x.duality_shape(), 1) == -2);
      if (!quad) rep.add(tag + ": tr c(X*) = -1", trace_power(y->duality_shape(), 1) == -1);
    }
  }
  return rep;
}

}  // namespace strange
