#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strange/catalog.hpp"
#include "strange/frame_shape.hpp"
#include "strange/report.hpp"

namespace strange {

/// Self-dual degree-24 sequences (χ₁,…,χ_N) with χ₁ ∈ {−2,−3,−4},
/// χ_m = −χ_{N/m}, |χ_m| ≤ |χ_N| and ∏ m^{χ_m} a positive integer, for every
/// N ≤ max_n. Each result has order N; results are ordered by (N, exponents).
std::vector<FrameShape> search_sequences(std::int64_t max_n);

struct SearchHit {
  FrameShape frame;
  std::optional<std::string> table8_label;
  /// Source reference when the shape is one of the catalog extras.
  std::optional<std::string> extra_class;
};

std::vector<SearchHit> label_search(const Catalog& catalog, std::int64_t max_n);

struct Pairing {
  std::string left;
  std::string right;
  FrameShape product;
  std::optional<std::string> table8_label;
};

struct PairingReport {
  std::vector<Pairing> pairings;
  std::vector<std::string> unmatched_rows;
  Report checks;
};

/// ππ* for every catalog dual pair (reduced shapes on the ICIS side), matched
/// against the Leech shape table, plus the Niemeier Coxeter shapes of the rows that name a
/// root system.
PairingReport classify_pairings(const Catalog& catalog);

}  // namespace strange
