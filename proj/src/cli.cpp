#include "stringyk/cli.hpp"

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "stringyk/acceptance.hpp"
#include "stringyk/json_io.hpp"

namespace stringyk {

namespace {

struct RunConfig {
    std::string group_spec;
    std::string rep_spec;
    std::string product = "stringy";
    std::string out_path;
    long order_cap = kDefaultOrderCap;
    unsigned seed = 20240824;
    bool compare_products = false;
    bool verify = false;
    long p = 0, q = 0;
};

void emit(const Json& doc, const std::string& out_path) {
    std::string text = dump_canonical(doc);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open " + out_path);
        f << text;
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path);
    return Json::parse(f);
}

GroupPtr parse_group(const std::string& spec, long cap) {
    if (spec.rfind("file:", 0) == 0) {
        GroupPtr g = group_from_json(load_json_file(spec.substr(5)));
        if (g->order > cap)
            throw std::invalid_argument("group exceeds --order-cap");
        return g;
    }
    if (spec == "Q8") return build_quaternion8();
    if (spec.size() < 2)
        throw std::invalid_argument("unknown group spec " + spec);
    long n = 0;
    try {
        n = std::stol(spec.substr(1));
    } catch (...) {
        throw std::invalid_argument("unknown group spec " + spec);
    }
    if (n < 1) throw std::invalid_argument("unknown group spec " + spec);
    if (spec[0] == 'Z') {
        if (n > cap) throw std::invalid_argument("group exceeds --order-cap");
        return build_cyclic(n);
    }
    if (spec[0] == 'S') return build_symmetric(n, cap);
    if (spec[0] == 'D') return build_dihedral(n, cap);
    throw std::invalid_argument("unknown group spec " + spec);
}

UnitaryModel parse_rep(const std::string& group_spec, const GroupPtr& g,
                       const std::string& spec) {
    if (spec.rfind("weights:", 0) == 0) {
        bool cyclic = false;
        for (int x = 0; x < g->order && !cyclic; ++x)
            cyclic = g->element_order(x) == g->order;
        if (!cyclic)
            throw std::invalid_argument("weights: requires a cyclic group");
        std::vector<long> w;
        std::string rest = spec.substr(8);
        size_t pos = 0;
        while (pos <= rest.size()) {
            size_t comma = rest.find(',', pos);
            std::string tok = rest.substr(
                pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (tok.empty()) throw std::invalid_argument("bad weight list");
            w.push_back(std::stol(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return cyclic_weights_model(g->order, w);
    }
    if (spec.rfind("file:", 0) == 0)
        return make_model(g, matrices_from_json(load_json_file(spec.substr(5))));
    if (spec == "regular") return regular_model(g);
    long n = 0;
    if (group_spec.size() >= 2 && (group_spec[0] == 'S' || group_spec[0] == 'D'))
        n = std::stol(group_spec.substr(1));
    if (spec == "standard") {
        if (group_spec == "Q8") return quaternion_standard_model();
        if (group_spec[0] == 'S') return symmetric_standard_model(n);
        if (group_spec[0] == 'D') return dihedral_standard_model(n);
        throw std::invalid_argument("standard: requires Sn, Dn, or Q8");
    }
    if (spec == "perm") {
        if (group_spec[0] == 'S') return symmetric_perm_model(n);
        if (group_spec[0] == 'D') return dihedral_perm_model(n);
        throw std::invalid_argument("perm: requires Sn or Dn");
    }
    throw std::invalid_argument("unknown representation spec " + spec);
}

using Product = std::function<DelocalizedCharacter(const DelocalizedCharacter&,
                                                   const DelocalizedCharacter&)>;

Json basis_json(const KBasis& kb) {
    Json basis = Json::array();
    for (const KBasisElement& el : kb.elems) {
        Json b;
        b["orbit"] = el.orbit;
        b["irrep"] = el.irrep;
        b["character"] = json_cyc_vector(el.ch.values);
        basis.push_back(std::move(b));
    }
    return basis;
}

Json product_table_json(const KBasis& kb, const Product& prod) {
    Json rows = Json::array();
    for (const KBasisElement& a : kb.elems) {
        Json row = Json::array();
        for (const KBasisElement& b : kb.elems)
            row.push_back(json_cyc_vector(kb.coordinates(prod(a.ch, b.ch))));
        rows.push_back(std::move(row));
    }
    return rows;
}

bool tables_equal(const Json& a, const Json& b) { return a == b; }

int cmd_group(const RunConfig& cfg) {
    GroupPtr g = parse_group(cfg.group_spec, cfg.order_cap);
    Json doc;
    doc["command"] = "group";
    doc["group"] = json_group(g);
    doc["commuting_pair_orbits"] = pair_space_of(g).orbits.size();
    emit(doc, cfg.out_path);
    return 0;
}

int cmd_chartable(const RunConfig& cfg) {
    GroupPtr g = parse_group(cfg.group_spec, cfg.order_cap);
    Json doc;
    doc["command"] = "chartable";
    doc["table"] = json_chartable(character_table(g));
    emit(doc, cfg.out_path);
    return 0;
}

int cmd_ptg(const RunConfig& cfg) {
    GroupPtr g = parse_group(cfg.group_spec, cfg.order_cap);
    GSetPtr pt = point_set(g);
    KBasis kb = k_basis(pt);
    Product prod;
    if (cfg.product == "stringy") {
        prod = closed_stringy_product;
    } else if (cfg.product == "tensor") {
        prod = tensor_character;
    } else if (cfg.product == "convolution") {
        prod = [&](const DelocalizedCharacter& a, const DelocalizedCharacter& b) {
            return ptg_from_class_function(
                pt, convolution(ptg_to_class_function(g, a),
                                ptg_to_class_function(g, b)));
        };
    } else {
        throw std::invalid_argument("ptg: product must be stringy, tensor, or "
                                    "convolution");
    }
    Json doc;
    doc["command"] = "ptg";
    doc["group"] = json_group(g);
    doc["product"] = cfg.product;
    doc["basis"] = basis_json(kb);
    doc["table"] = product_table_json(kb, prod);
    emit(doc, cfg.out_path);
    return 0;
}

int cmd_gg(const RunConfig& cfg) {
    GroupPtr g = parse_group(cfg.group_spec, cfg.order_cap);
    GSetPtr cs = conjugation_set(g);
    KBasis kb = k_basis(cs);
    Product tensor = tensor_character;
    Product stringy = closed_stringy_product;
    Product pontryagin = [&](const DelocalizedCharacter& a,
                             const DelocalizedCharacter& b) {
        return gg_from_pair_function(
            cs, pair_pontryagin(gg_to_pair_function(g, a),
                                gg_to_pair_function(g, b)));
    };
    Json doc;
    doc["command"] = "gg";
    doc["group"] = json_group(g);
    doc["basis"] = basis_json(kb);
    if (cfg.compare_products) {
        Json tt = product_table_json(kb, tensor);
        Json tp = product_table_json(kb, pontryagin);
        Json ts = product_table_json(kb, stringy);
        Json tables;
        tables["tensor"] = tt;
        tables["pontryagin"] = tp;
        tables["stringy"] = ts;
        doc["tables"] = std::move(tables);
        doc["pairwise_distinct"] = !tables_equal(tt, tp) &&
                                   !tables_equal(tt, ts) && !tables_equal(tp, ts);
    } else {
        Product prod;
        if (cfg.product == "stringy") prod = stringy;
        else if (cfg.product == "tensor") prod = tensor;
        else if (cfg.product == "pontryagin") prod = pontryagin;
        else
            throw std::invalid_argument(
                "gg: product must be stringy, tensor, or pontryagin");
        doc["product"] = cfg.product;
        doc["table"] = product_table_json(kb, prod);
    }
    emit(doc, cfg.out_path);
    return 0;
}

int cmd_linear(const RunConfig& cfg) {
    GroupPtr g = parse_group(cfg.group_spec, cfg.order_cap);
    UnitaryModel m = parse_rep(cfg.group_spec, g, cfg.rep_spec);
    SectorReport r = sector_report(m);
    Json doc;
    doc["command"] = "linear";
    doc["rep"] = cfg.rep_spec;
    doc["report"] = json_sector_report(m, r);
    emit(doc, cfg.out_path);
    return 0;
}

int cmd_orbisphere(const RunConfig& cfg) {
    OrbisphereModel m = build_orbisphere(cfg.p, cfg.q);
    Json doc;
    doc["command"] = "orbisphere";
    doc["model"] = json_orbisphere(m);
    doc["cr_ring"] = json_orbisphere_ring(cr_ring(m));
    if (cfg.verify) {
        doc["k_ring"] = json_k_ring_report(stringy_k_ring(m));
        check_ring_axioms(cr_ring(m));
        doc["cr_ring_axioms"] = true;
    } else {
        doc["k_ring"] = json_orbisphere_ring(stringy_k_table(m));
    }
    emit(doc, cfg.out_path);
    return 0;
}

int cmd_selftest(const RunConfig& cfg) {
    AcceptanceOptions opts;
    opts.seed = cfg.seed;
    std::vector<CriterionResult> results = run_acceptance(opts);
    bool all = true;
    Json arr = Json::array();
    for (const CriterionResult& r : results) {
        std::cerr << "[" << (r.pass ? "PASS" : "FAIL") << "] criterion " << r.id
                  << ": " << r.name << " (" << r.detail << ")\n";
        all = all && r.pass;
        Json c;
        c["id"] = r.id;
        c["name"] = r.name;
        c["pass"] = r.pass;
        c["detail"] = r.detail;
        arr.push_back(std::move(c));
    }
    Json doc;
    doc["command"] = "selftest";
    doc["seed"] = cfg.seed;
    doc["criteria"] = std::move(arr);
    doc["all_pass"] = all;
    emit(doc, cfg.out_path);
    return all ? 0 : 2;
}

} // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"exact stringy orbifold K-theory for finite models"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub, bool with_group) {
        if (with_group)
            sub->add_option("--group", cfg.group_spec,
                            "Zn | Sn | Dn | Q8 | file:PATH")
                ->required();
        sub->add_option("--out", cfg.out_path, "write JSON here instead of stdout");
        sub->add_option("--order-cap", cfg.order_cap, "maximum group order");
        return sub;
    };

    add_common(app.add_subcommand("group", "conjugacy data of a group"), true);
    add_common(app.add_subcommand("chartable", "character table"), true);
    CLI::App* ptg = add_common(
        app.add_subcommand("ptg", "K-theory of [pt/G] with a product table"),
        true);
    ptg->add_option("--product", cfg.product, "stringy | tensor | convolution");
    CLI::App* gg = add_common(
        app.add_subcommand("gg", "K-theory of [G/G] with product tables"), true);
    gg->add_option("--product", cfg.product, "stringy | tensor | pontryagin");
    gg->add_flag("--compare-products", cfg.compare_products,
                 "emit all three tables and their pairwise distinctness");
    CLI::App* linear = add_common(
        app.add_subcommand("linear", "twisted sectors of a linear model [V/G]"),
        true);
    linear
        ->add_option("--rep", cfg.rep_spec,
                     "weights:a,b,.. | standard | regular | perm | file:PATH")
        ->required();
    CLI::App* orb = add_common(
        app.add_subcommand("orbisphere", "weighted projective line WP(p,q)"),
        false);
    orb->add_option("p", cfg.p, "first weight")->required();
    orb->add_option("q", cfg.q, "second weight")->required();
    orb->add_flag("--verify", cfg.verify, "check the ring relations");
    CLI::App* self = add_common(
        app.add_subcommand("selftest", "run the acceptance criteria"), false);
    self->add_option("--seed", cfg.seed, "seed for sampled checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand("group")) return cmd_group(cfg);
        if (app.got_subcommand("chartable")) return cmd_chartable(cfg);
        if (app.got_subcommand("ptg")) return cmd_ptg(cfg);
        if (app.got_subcommand("gg")) return cmd_gg(cfg);
        if (app.got_subcommand("linear")) return cmd_linear(cfg);
        if (app.got_subcommand("orbisphere")) return cmd_orbisphere(cfg);
        if (app.got_subcommand("selftest")) return cmd_selftest(cfg);
        return 1;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace stringyk
