#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hexacycle/families.hpp"
#include "hexacycle/moduli.hpp"
#include "hexacycle/search.hpp"
#include "hexacycle/surface.hpp"

// JSON and CSV forms of the library values. Every exact value is a string.
namespace hexacycle::io {

using json = nlohmann::ordered_json;

json encode(const QuadMap& f);
QuadMap quadmap_from_json(const json& j);

json encode(const MarkedCycle& mc, const std::optional<json>& provenance = std::nullopt);
MarkedCycle marked_cycle_from_json(const json& j);

json encode(const ModelPoint& p);
ModelPoint model_point_from_json(const json& j);

json encode(const OrbitReport& r);
json encode(const IdentityRecord& r);
json encode(const std::vector<IdentityRecord>& records);
json encode(const SingularPointReport& r);
json encode(const PrefactorReport& r);
json encode(const MultiPoly& p);  // {"vars": [...], "terms": [{"exponents": [...], "coeff": "..."}]}
json boundary_catalog_json();
json boundary_containment_json(std::size_t samples_per_component);

json encode(const EllipticFamilyMember& m);
json encode(const Genus0Member& m);

json encode(const SearchRecord& r);
SearchRecord search_record_from_json(const json& j);
std::string csv_header();
std::string to_csv(const SearchRecord& r);

// Error object {"error": {"code": ..., "message": ...}}.
json error_json(const std::string& code, const std::string& message);

}  // namespace hexacycle::io
