#pragma once

#include <string>

#include <json.hpp>

#include "crystalfold/crystal.hpp"
#include "crystalfold/fold.hpp"
#include "crystalfold/folding.hpp"
#include "crystalfold/quiverrep.hpp"
#include "crystalfold/spin.hpp"

namespace crystalfold {

// Every artifact carries the schema tag.
inline constexpr const char* kSchemaTag = "crystal-fold/1";

nlohmann::json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const nlohmann::json& j);

nlohmann::json automorphism_to_json(const Quiver& q, const Automorphism& a);
Automorphism automorphism_from_json(const Quiver& q, const nlohmann::json& j);

nlohmann::json cartan_to_json(const CartanDatum& cd);
CartanDatum cartan_from_json(const nlohmann::json& j);

nlohmann::json crystal_to_json(const CrystalGraph& g);
CrystalGraph crystal_from_json(const nlohmann::json& j);

/// CrystalGraph JSON plus a folding block (orbits, source reference, sigma
/// restricted to the folded elements when supplied).
nlohmann::json folded_to_json(const FoldedCrystal& fc, const FoldedDatum& fd,
                              const std::string& source_ref,
                              const CrystalGraph* source = nullptr,
                              const InducedAutomorphism* ia = nullptr);

nlohmann::json point_to_json(const NakajimaPoint& p);
NakajimaPoint point_from_json(const Quiver& q, const nlohmann::json& j);

nlohmann::json spin_matrices_to_json(const SpinMatrices& sm);

/// Stable DOT rendering: vertices labeled by weight, edges by node name.
std::string crystal_to_dot(const CrystalGraph& g);

}  // namespace crystalfold
