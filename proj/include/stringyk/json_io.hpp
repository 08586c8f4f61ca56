#pragma once

#include "json.hpp"
#include "stringyk/character_table.hpp"
#include "stringyk/local_model.hpp"
#include "stringyk/orbifold.hpp"
#include "stringyk/orbisphere.hpp"

namespace stringyk {

// Insertion-ordered JSON keeps every report byte-deterministic.
using Json = nlohmann::ordered_json;

Json json_rational(const Rational& r);   // "num/den"
Json json_cyclotomic(const Cyclotomic& c); // {conductor, coeffs}
Json json_cyc_vector(const std::vector<Cyclotomic>& v);

Rational parse_rational_json(const Json& j);
Cyclotomic parse_cyclotomic_json(const Json& j);

Json json_group(const GroupPtr& g);
Json json_chartable(const TablePtr& t);
Json json_product_table(const ProductTable& t);
Json json_sector_report(const UnitaryModel& m, const SectorReport& r);
Json json_orbisphere(const OrbisphereModel& m);
Json json_orbisphere_ring(const OrbisphereRing& r);
Json json_k_ring_report(const KRingReport& rep);

// Loaders for `file:` specs: {"mul": [[...]], "names": [...]} and
// {"matrices": [[[cyclotomic]]]} with cyclotomic = "num/den" or
// {"conductor": n, "coeffs": ["num/den", ...]}.
GroupPtr group_from_json(const Json& j);
std::vector<CycMatrix> matrices_from_json(const Json& j);

std::string dump_canonical(const Json& j); // 2-space indent + newline

} // namespace stringyk
