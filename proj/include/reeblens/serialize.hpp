#pragma once

#include <string>

#include "reeblens/bott.hpp"
#include "reeblens/class_invariants.hpp"
#include "reeblens/dyn_verify.hpp"
#include "reeblens/esh_ranks.hpp"

#include "json.hpp"

namespace reeblens {

using json = nlohmann::json;

json to_json(const ClassInvariants& inv, long long p);
json invariants_table_json(const LensSpace& lens);
std::string invariants_table_text(const LensSpace& lens);

/// CSV rows (angle_turns, value, s_plus, s_minus) of B/divisor over the
/// upper half-circle: the angle-0 row first, then one row per jump with the
/// value at that angle.
std::string bott_csv(const BottFunction& bott, long long divisor);

/// Step plot of B/divisor over theta in [0, pi]. Open circles mark excluded
/// one-sided limits at jumps, filled circles the attained values.
std::string bott_svg(const BottFunction& bott, long long divisor);

json to_json(const GradedRanks& table);

json to_json(const OrbitRecord& orbit);
json to_json(const OrbitRecord& orbit, const TheoremReport& report);

} // namespace reeblens
