// sdwb: command-line workbench for the strange duality catalog.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "strange/catalog.hpp"
#include "strange/error.hpp"
#include "strange/eta.hpp"
#include "strange/lattice.hpp"
#include "strange/magic_square.hpp"
#include "strange/moonshine.hpp"
#include "strange/verify.hpp"

namespace {

using nlohmann::json;
using namespace strange;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string format = "text";
  std::string catalog_path;
  bool json() const { return format == "json"; }
};

const Catalog& catalog(const Options& o) {
  static std::optional<Catalog> loaded;
  if (o.catalog_path.empty()) return Catalog::builtin();
  if (!loaded) loaded = Catalog::load_file(o.catalog_path);
  return *loaded;
}

std::string join_ints(const std::vector<std::int64_t>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string fmt_tau(const UpperHalfPoint& t) {
  std::ostringstream os;
  os << t.re() << (t.im() < 0 ? "" : "+") << t.im() << "i";
  return os.str();
}

int cmd_show(const Options& o, const std::string& name) {
  const auto& r = catalog(o).lookup(name);
  if (o.json()) {
    std::cout << record_to_json(r).dump(2) << "\n";
    return kOk;
  }
  std::cout << "name: " << r.name << "\n"
            << "family: " << to_string(r.family) << "\n";
  for (const auto& e : r.equations) std::cout << "equation: " << e << "\n";
  if (r.restrictions) std::cout << "restrictions: " << *r.restrictions << "\n";
  std::cout << "weights: " << r.weights.to_string() << "\n"
            << "dol: " << join_ints(r.dol) << "\n";
  for (const auto& g : r.gab_variants) std::cout << "gab: " << g.to_string() << " [" << to_string(g.type) << "]\n";
  std::cout << "mu: " << r.mu << "\n";
  if (r.mu1) std::cout << "mu1: " << *r.mu1 << "\nnu: " << *r.nu << "\n";
  std::cout << "d: " << r.d << "\n";
  if (r.mu_flat) std::cout << "mu_flat: " << *r.mu_flat << "\nd_flat: " << *r.d_flat << "\n";
  if (r.discriminant_form) std::cout << "discriminant form: " << *r.discriminant_form << "\n";
  if (r.dual_discriminant_form) std::cout << "dual form: " << *r.dual_discriminant_form << "\n";
  if (r.frame) std::cout << "frame: " << r.frame->to_string() << "\n";
  if (r.frame_flat) std::cout << "frame_flat: " << r.frame_flat->to_string() << "\n";
  std::cout << "h: " << r.h << "\n";
  std::cout << "duals:";
  for (const auto& d : r.duals) std::cout << " " << d;
  std::cout << "\n";
  if (r.series_dual) {
    std::cout << "series dual:";
    for (const auto& n : r.series_dual->names) std::cout << " " << n;
    if (r.series_dual->h_star) std::cout << " (h* = " << *r.series_dual->h_star << ")";
    std::cout << " mu* = " << r.series_dual->mu_star << "\n";
  }
  if (r.coxeter_fixture) std::cout << "coxeter fixture: " << r.coxeter_fixture->size() << " generators\n";
  return kOk;
}

int cmd_dual(const Options& o, const std::string& name) {
  auto duals = catalog(o).dual_of(name);
  if (o.json()) {
    json j{{"name", name}, {"duals", json::array()}};
    for (const auto* d : duals) j["duals"].push_back(d->name);
    std::cout << j.dump() << "\n";
  } else {
    for (const auto* d : duals) std::cout << d->name << "\n";
  }
  return kOk;
}

int cmd_frame_dual(const Options& o, const std::string& text) {
  FrameShape pi = parse_frame(text);
  FrameShape dual = saito_dual(pi);
  if (o.json()) {
    std::cout << json{{"shape", pi.to_string()}, {"order", pi.order()}, {"dual", dual.to_string()},
                      {"self_dual", dual == pi}}
                     .dump()
              << "\n";
  } else {
    std::cout << dual.to_string() << "\n";
  }
  return kOk;
}

int cmd_verify(const Options& o, const std::string& suite, bool list, bool verbose) {
  if (list) {
    if (o.json()) {
      json j = json::array();
      for (const auto& s : verification_suites()) j.push_back({{"suite", s.name}, {"description", s.description}});
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& s : verification_suites()) std::cout << std::left << std::setw(10) << s.name << " " << s.description << "\n";
    }
    return kOk;
  }
  Report rep = run_suite(suite, catalog(o));
  if (o.json()) {
    json checks = json::array();
    for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    std::cout << json{{"suite", suite}, {"checks", checks}, {"total", rep.checks.size()}, {"failures", rep.failures()}}
                     .dump(2)
              << "\n";
  } else {
    for (const auto& c : rep.checks) {
      if (c.passed && !verbose) continue;
      std::cout << (c.passed ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
    }
    std::cout << suite << ": " << rep.checks.size() << " checks, " << rep.failures() << " failures\n";
  }
  return rep.ok() ? kOk : kFailed;
}

json square_json(const MagicSquare& s) { return {{"matrix", s.entries}}; }

int cmd_kobayashi(const Options& o, const std::string& weights, const std::string& degree, bool all_squares,
                  const std::string& dual_weights, const std::string& dual_degree, const std::string& convention) {
  WeightSystem w = parse_weight_system(weights + ";" + degree);
  if (!dual_weights.empty()) {
    WeightSystem wp = parse_weight_system(dual_weights + ";" + (dual_degree.empty() ? degree : dual_degree));
    std::vector<SquareConvention> conventions;
    if (!convention.empty()) {
      conventions.push_back(parse_convention(convention));
    } else if (w.weights.size() == 4 && wp.weights.size() == 4) {
      conventions.push_back(SquareConvention::Square4x4);
    } else if (w.weights.size() == 3 && wp.weights.size() == 4) {
      conventions.push_back(SquareConvention::Rect3x4);
    } else if (w.weights.size() == 4 && wp.weights.size() == 3) {
      conventions.push_back(SquareConvention::Rect4x3);
    }
    json out = json::array();
    for (auto c : conventions) {
      auto squares = find_generalized_squares(w, wp, c);
      json entry{{"convention", std::string(to_string(c))},
                 {"left", w.to_string()},
                 {"right", wp.to_string()},
                 {"degree_left", w.magic_degree()},
                 {"degree_right", wp.magic_degree()},
                 {"squares", json::array()}};
      for (const auto& s : squares) entry["squares"].push_back(square_json(s));
      if (c == SquareConvention::Square4x4 && w.magic_degree() != wp.magic_degree())
        entry["note"] = "degree mismatch: primitive squares need N = N'";
      if (all_squares) {
        entry["all_squares"] = json::array();
        for (const auto& s : find_magic_squares(w, wp, false)) {
          json sj = square_json(s);
          if (c == SquareConvention::Square4x4) sj["det"] = to_string(grid_determinant(s.entries));
          entry["all_squares"].push_back(sj);
        }
      }
      out.push_back(entry);
    }
    if (conventions.empty() && w.weights.size() == 3 && wp.weights.size() == 3) {
      auto squares = find_magic_squares(w, wp, !all_squares);
      json entry{{"convention", "square-3x3"}, {"left", w.to_string()}, {"right", wp.to_string()},
                 {"squares", json::array()}};
      for (const auto& s : squares) entry["squares"].push_back(square_json(s));
      out.push_back(entry);
    }
    if (o.json()) {
      std::cout << out.dump(2) << "\n";
    } else {
      for (const auto& e : out) {
        std::cout << e["convention"].get<std::string>() << " " << e["left"].get<std::string>() << " x "
                  << e["right"].get<std::string>() << ": " << e["squares"].size() << " squares";
        if (e.contains("note")) std::cout << " (" << e["note"].get<std::string>() << ")";
        if (e["squares"].empty()) std::cout << " [flagged: no square under this convention]";
        std::cout << "\n";
        for (const auto& s : e["squares"]) {
          std::cout << " ";
          for (const auto& row : s["matrix"]) {
            std::cout << " [";
            for (std::size_t k = 0; k < row.size(); ++k) std::cout << (k ? " " : "") << row[k].get<std::int64_t>();
            std::cout << "]";
          }
          std::cout << "\n";
        }
        if (e.contains("all_squares")) {
          std::cout << "  without primitivity: " << e["all_squares"].size() << " squares\n";
          for (const auto& s : e["all_squares"]) {
            std::cout << " ";
            for (const auto& row : s["matrix"]) {
              std::cout << " [";
              for (std::size_t k = 0; k < row.size(); ++k) std::cout << (k ? " " : "") << row[k].get<std::int64_t>();
              std::cout << "]";
            }
            if (s.contains("det")) std::cout << "  det " << s["det"].get<std::string>();
            std::cout << "\n";
          }
        }
      }
    }
    return kOk;
  }

  auto duals = enumerate_duals(w);
  json out{{"weights", w.to_string()}, {"duals", json::array()}};
  for (const auto& d : duals) {
    json entry{{"weights", d.to_string()}};
    std::string name;
    for (const auto& r : catalog(o).records())
      if (r.weights.degrees == d.degrees && r.weights.weights.size() == 3) {
        auto sorted = r.weights.weights;
        std::sort(sorted.begin(), sorted.end());
        if (sorted == d.weights) name = r.name;
      }
    if (!name.empty()) entry["catalog_name"] = name;
    if (all_squares) {
      entry["squares"] = json::array();
      for (const auto& s : find_magic_squares(w, d, true)) entry["squares"].push_back(square_json(s));
    }
    out["duals"].push_back(entry);
  }
  if (o.json()) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& e : out["duals"]) {
      std::cout << e["weights"].get<std::string>();
      if (e.contains("catalog_name")) std::cout << "  (" << e["catalog_name"].get<std::string>() << ")";
      std::cout << "\n";
      if (e.contains("squares"))
        for (const auto& s : e["squares"]) {
          std::cout << " ";
          for (const auto& row : s["matrix"]) {
            std::cout << " [";
            for (std::size_t k = 0; k < row.size(); ++k) std::cout << (k ? " " : "") << row[k].get<std::int64_t>();
            std::cout << "]";
          }
          std::cout << "\n";
        }
    }
  }
  return kOk;
}

int cmd_moonshine(const Options& o, std::int64_t max_n) {
  auto hits = label_search(catalog(o), max_n);
  if (o.json()) {
    json arr = json::array();
    for (const auto& h : hits) {
      json e{{"N", h.frame.order()}, {"shape", h.frame.to_string()},
             {"label", h.table8_label ? *h.table8_label : "extra"}};
      if (h.extra_class) e["class_label"] = *h.extra_class;
      arr.push_back(e);
    }
    std::cout << json{{"max_n", max_n}, {"count", hits.size()}, {"shapes", arr}}.dump(2) << "\n";
  } else {
    for (const auto& h : hits) {
      std::cout << std::setw(4) << h.frame.order() << "  " << std::left << std::setw(40) << h.frame.to_string()
                << std::right << " " << (h.table8_label ? *h.table8_label : "extra");
      if (h.extra_class) std::cout << " (" << *h.extra_class << ")";
      std::cout << "\n";
    }
    std::cout << hits.size() << " shapes\n";
  }
  return kOk;
}

int cmd_lattice(const Options& o, const std::string& op, const std::string& graph) {
  GramLattice lat = parse_lattice_expr(graph);
  json out{{"graph", graph}, {"rank", lat.rank()}};
  std::string text;
  if (op == "det") {
    auto d = determinant(lat);
    out["determinant"] = to_string(d);
    text = to_string(d);
  } else if (op == "snf") {
    json arr = json::array();
    for (const auto& f : smith_invariants(lat)) {
      arr.push_back(to_string(f));
      text += (text.empty() ? "" : " ") + to_string(f);
    }
    out["invariants"] = arr;
  } else if (op == "sig") {
    auto s = signature(lat);
    out["signature"] = {s.positive, s.negative, s.zero};
    text = "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + "," + std::to_string(s.zero) + ")";
  } else {
    auto r = coxeter_element(lat);
    out["char_poly"] = r.char_poly.to_string();
    if (r.frame) out["frame"] = r.frame->to_string();
    if (r.order) out["order"] = *r.order;
    text = "char poly: " + r.char_poly.to_string() + "\nframe: " + (r.frame ? r.frame->to_string() : "none") +
           "\norder: " + (r.order ? std::to_string(*r.order) : "not found");
  }
  if (o.json()) std::cout << out.dump() << "\n";
  else std::cout << text << "\n";
  return kOk;
}

int cmd_coxeter_root(const Options& o, const std::string& symbols) {
  auto parts = parse_root_system(symbols);
  FrameShape f = coxeter_frame_of_root_system(parts);
  if (o.json()) {
    std::cout << json{{"root_system", symbols}, {"frame", f.to_string()}, {"degree", to_string(degree(f))}}.dump()
              << "\n";
  } else {
    std::cout << f.to_string() << "\n";
  }
  return kOk;
}

int cmd_eta_check(const Options& o, const std::string& name, const std::string& shape, const std::string& tau_text,
                  double tol) {
  if (name.empty() == shape.empty()) throw CLI::ValidationError("eta-check", "give exactly one of <name> or --shape");
  FrameShape pi = shape.empty() ? catalog(o).lookup(name).duality_shape() : parse_frame(shape);
  std::vector<UpperHalfPoint> points;
  if (tau_text.empty()) {
    points = eta_sample_points();
  } else {
    auto comma = tau_text.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("--tau", "expected re,im");
    points.emplace_back(std::stod(tau_text.substr(0, comma)), std::stod(tau_text.substr(comma + 1)));
  }
  bool ok = true;
  json arr = json::array();
  for (const auto& t : points) {
    double r = saito_identity_residual(pi, t);
    ok = ok && r < tol;
    arr.push_back({{"tau", fmt_tau(t)}, {"residual", r}, {"passed", r < tol}});
    if (!o.json())
      std::cout << (r < tol ? "ok   " : "FAIL ") << "tau = " << fmt_tau(t) << "  residual " << std::scientific
                << std::setprecision(3) << r << std::defaultfloat << "\n";
  }
  if (o.json()) std::cout << json{{"shape", pi.to_string()}, {"tolerance", tol}, {"points", arr}}.dump(2) << "\n";
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strange duality workbench"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--catalog", opt.catalog_path, "Load this catalog file instead of the built-in one");

  std::string name, shape, suite = "all", weights, degree, dual_weights, dual_degree, convention, op, graph, symbols,
                          tau;
  bool list = false, verbose = false, all_squares = false, json_flag = false;
  std::int64_t max_n = 119;
  double tol = 1e-8;

  auto* show = app.add_subcommand("show", "Print a catalog record");
  show->add_option("name", name, "Singularity name, e.g. J'9")->required();
  auto* dual = app.add_subcommand("dual", "Print the dual singularities");
  dual->add_option("name", name)->required();
  auto* fdual = app.add_subcommand("frame-dual", "Saito dual of a Frame shape");
  fdual->add_option("shape", shape, "e.g. 2*3*30/1*6*15")->required();
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suite", suite, "all|arnold|extension|lattices|frames|eta|kobayashi|moonshine");
  verify->add_flag("--list", list, "List the suites");
  verify->add_flag("--verbose,-v", verbose, "Also print passing checks");
  auto* kob = app.add_subcommand("kobayashi", "Dual weight systems via weighted magic squares");
  kob->add_option("--weights", weights, "w1,w2,w3")->required();
  kob->add_option("--degree", degree, "N (or N1,N2)")->required();
  kob->add_option("--dual-weights", dual_weights, "Search squares against this system instead");
  kob->add_option("--dual-degree", dual_degree, "Degree of the dual system");
  kob->add_option("--convention", convention, "square-4x4|rect-3x4|rect-4x3");
  kob->add_flag("--all-squares", all_squares, "List the squares as well");
  kob->add_flag("--json", json_flag, "JSON output");
  auto* moon = app.add_subcommand("moonshine", "Self-dual degree-24 Frame shape search");
  moon->add_option("--max-n", max_n, "Largest order N")->check(CLI::PositiveNumber);
  moon->add_flag("--json", json_flag, "JSON output");
  auto* lat = app.add_subcommand("lattice", "Lattice invariants");
  lat->add_option("op", op, "det|snf|sig|coxeter")->required()->check(CLI::IsMember({"det", "snf", "sig", "coxeter"}));
  lat->add_option("--graph", graph, "e.g. star:2,3,7+U")->required();
  auto* cox = app.add_subcommand("coxeter-root", "Coxeter Frame shape of a root system");
  cox->add_option("symbols", symbols, "e.g. A11+D7+E6")->required();
  auto* eta_cmd = app.add_subcommand("eta-check", "Saito eta identity residuals");
  eta_cmd->add_option("name", name, "Catalog name");
  eta_cmd->add_option("--shape", shape, "Frame shape");
  eta_cmd->add_option("--tau", tau, "re,im");
  eta_cmd->add_option("--tol", tol, "Tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (json_flag) opt.format = "json";

  try {
    if (*show) return cmd_show(opt, name);
    if (*dual) return cmd_dual(opt, name);
    if (*fdual) return cmd_frame_dual(opt, shape);
    if (*verify) return cmd_verify(opt, suite, list, verbose);
    if (*kob) return cmd_kobayashi(opt, weights, degree, all_squares, dual_weights, dual_degree, convention);
    if (*moon) return cmd_moonshine(opt, max_n);
    if (*lat) return cmd_lattice(opt, op, graph);
    if (*cox) return cmd_coxeter_root(opt, symbols);
    if (*eta_cmd) return cmd_eta_check(opt, name, shape, tau, tol);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
