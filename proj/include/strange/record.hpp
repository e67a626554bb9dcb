#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "strange/frame_shape.hpp"
#include "strange/weights.hpp"

namespace strange {

enum class Family {
  ExceptionalUnimodal,
  TriangleIcis,
  QuadrilateralHypersurface,
  QuadrilateralIcis,
};

std::string_view to_string(Family f);
Family parse_family(std::string_view text);

/// Which Coxeter–Dynkin extension a Gabrielov symbol denotes. The type is a
/// function of the arity and the underline mask (bit i = entry i underlined).
enum class GabSymbolType {
  Plain,            // no underlines: triangle graphs
  HypersurfaceOne,  // (p1, p2, _p3_)
  HypersurfaceTwo,  // (p1, _p2_, _p3_)
  IcisOne,          // (p1, p2, p3, _p4_)
  IcisTwo,          // (p1, p2, _p3_, _p4_)
  IcisThree,        // (p1, _p2_, p3, _p4_)
  AllUnderlined,    // (_3_, _3_, _3_, _3_)
};

std::string_view to_string(GabSymbolType t);
GabSymbolType parse_gab_symbol_type(std::string_view text);
/// Symbol type implied by arity and underline mask; Malformed if none fits.
GabSymbolType classify_gab_symbol(std::size_t arity, unsigned underline_mask);

struct GabVariant {
  GabSymbolType type = GabSymbolType::Plain;
  std::vector<std::int64_t> numbers;
  unsigned underline_mask = 0;

  std::string to_string() const;
};

struct SeriesDual {
  std::vector<std::string> names;
  std::optional<std::int64_t> h_star;
  std::int64_t mu_star = 0;
};

struct SingularityRecord {
  std::string name;
  Family family = Family::ExceptionalUnimodal;
  std::vector<std::string> equations;
  /// Conditions on the modulus a, verbatim.
  std::optional<std::string> restrictions;
  WeightSystem weights;
  std::vector<std::int64_t> dol;
  std::vector<GabVariant> gab_variants;
  std::int64_t mu = 0;
  std::int64_t d = 0;
  // Complete intersections only.
  std::optional<std::int64_t> mu1;
  std::optional<std::int64_t> nu;
  std::optional<std::int64_t> mu_flat;
  std::optional<std::int64_t> d_flat;
  std::optional<std::string> discriminant_form;
  std::optional<std::string> dual_discriminant_form;
  /// Monodromy shape π(c) where tabulated.
  std::optional<FrameShape> frame;
  /// Shape π(c♭) of the reduced Coxeter element (complete intersections).
  std::optional<FrameShape> frame_flat;
  std::int64_t h = 0;
  std::vector<std::string> duals;
  std::optional<SeriesDual> series_dual;
  /// Intersection matrix of a distinguished set of generators, when transcribed.
  std::optional<std::vector<std::vector<std::int64_t>>> coxeter_fixture;

  bool is_icis() const { return family == Family::TriangleIcis || family == Family::QuadrilateralIcis; }
  bool is_hypersurface() const { return !is_icis(); }
  /// The shape that enters the duality: π for hypersurfaces, π♭ for ICIS.
  const FrameShape& duality_shape() const;
  /// μ for hypersurfaces, μ♭ for ICIS.
  std::int64_t duality_mu() const;
  /// d for hypersurfaces, d♭ for ICIS.
  std::int64_t duality_d() const;
};

struct Table8Row {
  std::string atlas_label;
  FrameShape frame;
  bool mukai_star = false;
  std::vector<std::string> niemeier;
  std::vector<std::pair<std::string, std::string>> duality_pairs;
};

struct KondoExtra {
  FrameShape frame;
  std::string class_label;
};

}  // namespace strange
