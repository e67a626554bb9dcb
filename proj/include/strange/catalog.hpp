#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "strange/record.hpp"
#include "strange/report.hpp"

namespace strange {

/// The 33 singularities with their duality links, the table of self-dual
/// Leech Frame shapes and the three extra search results. Immutable after
/// loading; every load is validated against the catalog invariants.
class Catalog {
 public:
  static Catalog from_json(const nlohmann::json& doc);
  static Catalog from_text(std::string_view text);
  static Catalog load_file(const std::string& path);
  /// The data file compiled into the library.
  static const Catalog& builtin();

  const std::vector<SingularityRecord>& records() const { return records_; }
  const std::vector<Table8Row>& table8() const { return table8_; }
  const std::vector<KondoExtra>& kondo_extras() const { return kondo_; }
  int schema_version() const { return schema_version_; }

  const SingularityRecord& lookup(std::string_view name) const;
  const SingularityRecord* find(std::string_view name) const;
  std::vector<const SingularityRecord*> dual_of(std::string_view name) const;
  std::vector<const SingularityRecord*> family(Family f) const;

  /// Unordered dual pairs, each listed once, in catalog order.
  std::vector<std::pair<std::string, std::string>> dual_pairs() const;

  std::optional<Table8Row> table8_match(const FrameShape& pi) const;

  /// Every catalog invariant as an individual check.
  Report validate() const;

 private:
  int schema_version_ = 0;
  std::vector<SingularityRecord> records_;
  std::vector<Table8Row> table8_;
  std::vector<KondoExtra> kondo_;
};

nlohmann::json record_to_json(const SingularityRecord& r);
SingularityRecord record_from_json(const nlohmann::json& j);
nlohmann::json table8_row_to_json(const Table8Row& row);

/// Parses a Gabrielov symbol such as `2 _6_ _6_`.
GabVariant parse_gab_variant(std::string_view text);

/// |d| from the determinant formula attached to the symbol type. NoFormula
/// for plain symbols and for the all-underlined symbol.
std::int64_t quad_determinant_formula(const GabVariant& variant);

/// Strange duality identities for the 14 exceptional unimodal singularities:
/// Dol/Gab exchange, N = N*, μ + μ* = 24, d = d*, and the Saito dual of the
/// tabulated shapes.
Report verify_arnold(const Catalog& catalog);

/// The extended duality for the 19 remaining records, with the reduced data
/// substituted on the ICIS side.
Report verify_extension(const Catalog& catalog);

}  // namespace strange
