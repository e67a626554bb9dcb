#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strange/catalog.hpp"
#include "strange/eta.hpp"
#include "strange/lattice.hpp"
#include "strange/report.hpp"

namespace strange {

struct SuiteInfo {
  std::string name;
  std::string description;
};

/// The named suites in execution order (`all` is their union).
const std::vector<SuiteInfo>& verification_suites();

/// Runs one suite (or `all`); Malformed for an unknown suite name.
Report run_suite(std::string_view name, const Catalog& catalog);

Report suite_arnold(const Catalog& catalog);
Report suite_extension(const Catalog& catalog);
Report suite_lattices(const Catalog& catalog);
Report suite_frames(const Catalog& catalog);
Report suite_eta(const Catalog& catalog);
Report suite_kobayashi(const Catalog& catalog);
Report suite_moonshine(const Catalog& catalog);

/// τ values used by the eta suite.
std::vector<UpperHalfPoint> eta_sample_points();

/// Shapes of the extended duality (quadrilateral hypersurfaces, every reduced
/// ICIS shape and the unreduced I₁,₀ shape), deduplicated, each with the name
/// of a record it belongs to.
std::vector<std::pair<std::string, FrameShape>> extension_shapes(const Catalog& catalog);

/// Coxeter element of a transcribed generator set, split as (λ − 1)^k · φ.
struct FixtureAnalysis {
  IntPolynomial char_poly;
  std::int64_t unit_multiplicity = 0;
  IntPolynomial reduced_poly;
  std::optional<FrameShape> reduced_frame;
  Signature gram_signature;
};

FixtureAnalysis analyze_fixture(const std::vector<std::vector<std::int64_t>>& gram, std::int64_t h);

}  // namespace strange
