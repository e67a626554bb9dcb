#include "strange/record.hpp"

#include <array>

#include "strange/error.hpp"

namespace strange {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 4> kFamilies{{
    {Family::ExceptionalUnimodal, "exceptional-unimodal"},
    {Family::TriangleIcis, "triangle-ICIS"},
    {Family::QuadrilateralHypersurface, "quadrilateral-hypersurface"},
    {Family::QuadrilateralIcis, "quadrilateral-ICIS"},
}};

constexpr std::array<std::pair<GabSymbolType, std::string_view>, 7> kGabTypes{{
    {GabSymbolType::Plain, "plain"},
    {GabSymbolType::HypersurfaceOne, "hypersurface-1"},
    {GabSymbolType::HypersurfaceTwo, "hypersurface-2"},
    {GabSymbolType::IcisOne, "icis-1"},
    {GabSymbolType::IcisTwo, "icis-2"},
    {GabSymbolType::IcisThree, "icis-3"},
    {GabSymbolType::AllUnderlined, "all-underlined"},
}};

}  // namespace

std::string_view to_string(Family f) {
  for (const auto& [k, v] : kFamilies)
    if (k == f) return v;
  return "?";
}

Family parse_family(std::string_view text) {
  for (const auto& [k, v] : kFamilies)
    if (v == text) return k;
  throw Error(ErrorCode::Malformed, "unknown family: " + std::string(text));
}

std::string_view to_string(GabSymbolType t) {
  for (const auto& [k, v] : kGabTypes)
    if (k == t) return v;
  return "?";
}

GabSymbolType parse_gab_symbol_type(std::string_view text) {
  for (const auto& [k, v] : kGabTypes)
    if (v == text) return k;
  throw Error(ErrorCode::Malformed, "unknown Gabrielov symbol type: " + std::string(text));
}

GabSymbolType classify_gab_symbol(std::size_t arity, unsigned mask) {
  if (mask == 0 && (arity == 3 || arity == 4)) return GabSymbolType::Plain;
  if (arity == 3) {
    if (mask == 0b100) return GabSymbolType::HypersurfaceOne;
    if (mask == 0b110) return GabSymbolType::HypersurfaceTwo;
  } else if (arity == 4) {
    if (mask == 0b1000) return GabSymbolType::IcisOne;
    if (mask == 0b1100) return GabSymbolType::IcisTwo;
    if (mask == 0b1010) return GabSymbolType::IcisThree;
    if (mask == 0b1111) return GabSymbolType::AllUnderlined;
  }
  throw Error(ErrorCode::Malformed, "no Gabrielov symbol type for arity " + std::to_string(arity) +
                                        " and underline mask " + std::to_string(mask));
}

std::string GabVariant::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < numbers.size(); ++i) {
    if (i) out += ' ';
    bool under = (underline_mask >> i) & 1U;
    if (under) out += '_';
    out += std::to_string(numbers[i]);
    if (under) out += '_';
  }
  return out;
}

const FrameShape& SingularityRecord::duality_shape() const {
  const auto& s = is_icis() ? frame_flat : frame;
  if (!s) throw Error(ErrorCode::InvalidCatalog, name + " has no duality shape");
  return *s;
}

std::int64_t SingularityRecord::duality_mu() const {
  if (!is_icis()) return mu;
  if (!mu_flat) throw Error(ErrorCode::InvalidCatalog, name + " lacks mu_flat");
  return *mu_flat;
}

std::int64_t SingularityRecord::duality_d() const {
  if (!is_icis()) return d;
  if (!d_flat) throw Error(ErrorCode::InvalidCatalog, name + " lacks d_flat");
  return *d_flat;
}

}  // namespace strange
