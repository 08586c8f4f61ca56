#include "stringyk/json_io.hpp"

namespace stringyk {

Json json_rational(const Rational& r) { return rational_to_string(r); }

Json json_cyclotomic(const Cyclotomic& c) {
    Json j;
    j["conductor"] = c.conductor();
    Json coeffs = Json::array();
    for (const Rational& x : c.coeffs()) coeffs.push_back(rational_to_string(x));
    j["coeffs"] = std::move(coeffs);
    return j;
}

Json json_cyc_vector(const std::vector<Cyclotomic>& v) {
    Json j = Json::array();
    for (const Cyclotomic& c : v) j.push_back(json_cyclotomic(c));
    return j;
}

Rational parse_rational_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    return parse_rational(j.get<std::string>());
}

Cyclotomic parse_cyclotomic_json(const Json& j) {
    if (j.is_string() || j.is_number_integer())
        return Cyclotomic(parse_rational_json(j));
    long n = j.at("conductor").get<long>();
    std::vector<Rational> coeffs;
    for (const Json& c : j.at("coeffs")) coeffs.push_back(parse_rational_json(c));
    return Cyclotomic::from_coeffs(n, std::move(coeffs));
}

Json json_group(const GroupPtr& g) {
    const ConjugacyData& cd = conjugacy_of(g);
    Json j;
    j["order"] = g->order;
    j["exponent"] = g->exponent();
    j["num_classes"] = cd.classes.size();
    Json classes = Json::array();
    for (const auto& cls : cd.classes) {
        Json c;
        c["representative"] = cls[0];
        c["size"] = cls.size();
        c["element_order"] = g->element_order(cls[0]);
        classes.push_back(std::move(c));
    }
    j["classes"] = std::move(classes);
    if (!g->names.empty()) j["names"] = g->names;
    return j;
}

Json json_chartable(const TablePtr& t) {
    Json j;
    j["group"] = json_group(t->group);
    j["degrees"] = t->degrees;
    Json rows = Json::array();
    for (const ClassFunction& row : t->irreducibles)
        rows.push_back(json_cyc_vector(row.values()));
    j["rows"] = std::move(rows);
    return j;
}

Json json_product_table(const ProductTable& t) {
    Json j = Json::array();
    for (const auto& row : t) {
        Json r = Json::array();
        for (const auto& entry : row) r.push_back(json_cyc_vector(entry));
        j.push_back(std::move(r));
    }
    return j;
}

Json json_sector_report(const UnitaryModel& m, const SectorReport& r) {
    Json j;
    j["group"] = json_group(m.group);
    j["dim"] = m.dim;
    Json sectors = Json::array();
    for (const SectorDatum& s : r.sectors) {
        Json d;
        d["representative"] = s.g;
        d["fixed_dim"] = s.fixed_dim;
        Json angles = Json::array();
        for (const auto& [theta, mult] : s.angles) {
            Json a;
            a["theta"] = json_rational(theta);
            a["multiplicity"] = mult;
            angles.push_back(std::move(a));
        }
        d["angles"] = std::move(angles);
        d["age"] = json_rational(s.age);
        sectors.push_back(std::move(d));
    }
    j["sectors"] = std::move(sectors);
    Json pairs = Json::array();
    for (const ObstructionDatum& o : r.pairs) {
        Json d;
        d["g1"] = o.g1;
        d["g2"] = o.g2;
        d["rank"] = json_cyclotomic(o.total.rank());
        d["genuine"] = o.total.is_genuine();
        Json comps = Json::array();
        for (const JointComponent& c : o.components) {
            Json cj;
            cj["theta1"] = json_rational(c.theta1);
            cj["theta2"] = json_rational(c.theta2);
            cj["theta12"] = json_rational(c.theta12);
            cj["dim"] = c.dim;
            comps.push_back(std::move(cj));
        }
        d["components"] = std::move(comps);
        pairs.push_back(std::move(d));
    }
    j["pairs"] = std::move(pairs);
    return j;
}

Json json_orbisphere(const OrbisphereModel& m) {
    Json j;
    j["p"] = m.p;
    j["q"] = m.q;
    Json ax = Json::array(), ay = Json::array();
    for (const Rational& a : m.age_x) ax.push_back(json_rational(a));
    for (const Rational& a : m.age_y) ay.push_back(json_rational(a));
    j["ages_x"] = std::move(ax);
    j["ages_y"] = std::move(ay);
    return j;
}

Json json_orbisphere_ring(const OrbisphereRing& r) {
    Json j;
    j["dim"] = r.dim;
    Json t = Json::array();
    for (const auto& row : r.table) {
        Json jr = Json::array();
        for (const auto& entry : row) jr.push_back(json_cyc_vector(entry));
        t.push_back(std::move(jr));
    }
    j["structure_constants"] = std::move(t);
    return j;
}

Json json_k_ring_report(const KRingReport& rep) {
    Json j;
    j["model"] = json_orbisphere(rep.ring.model);
    j["ring"] = json_orbisphere_ring(rep.ring);
    j["alpha_generator_sector"] = rep.alpha_gen;
    j["beta_generator_sector"] = rep.beta_gen;
    j["alpha_relation"] = rep.alpha_relation;
    j["beta_relation"] = rep.beta_relation;
    j["u_relation"] = rep.u_relation;
    j["normalization_freedom_flagged"] = rep.normalization_freedom_flagged;
    return j;
}

GroupPtr group_from_json(const Json& j) {
    std::vector<std::vector<int>> mul;
    for (const Json& row : j.at("mul"))
        mul.push_back(row.get<std::vector<int>>());
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    return build_from_table(std::move(mul), std::move(names));
}

std::vector<CycMatrix> matrices_from_json(const Json& j) {
    std::vector<CycMatrix> out;
    for (const Json& mj : j.at("matrices")) {
        long rows = (long)mj.size();
        long cols = rows ? (long)mj[0].size() : 0;
        CycMatrix m(rows, cols);
        for (long r = 0; r < rows; ++r)
            for (long c = 0; c < cols; ++c)
                m.at(r, c) = parse_cyclotomic_json(mj[r][c]);
        out.push_back(std::move(m));
    }
    return out;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

} // namespace stringyk
