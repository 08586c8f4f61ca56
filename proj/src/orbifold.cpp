#include "stringyk/orbifold.hpp"

namespace stringyk {

void KClass::check_witness() const {
    if (!witness) return;
    if (!(deloc_character(*witness) == ch))
        throw InvariantViolation("witness character does not match the class");
}

std::vector<Cyclotomic> KBasis::coordinates(const DelocalizedCharacter& c) const {
    if (c.lambda.get() != lambda.get())
        throw std::invalid_argument("coordinates: wrong inertia set");
    CycMatrix rhs((long)c.values.size(), 1);
    for (size_t i = 0; i < c.values.size(); ++i) rhs.at((long)i, 0) = c.values[i];
    CycMatrix x = char_matrix.solve(rhs);
    std::vector<Cyclotomic> out(x.rows());
    for (long i = 0; i < x.rows(); ++i) out[i] = x.at(i, 0);
    return out;
}

KBasis k_basis(const GSetPtr& s) {
    KBasis kb;
    kb.s = s;
    kb.lambda = inertia_of(s);
    const FiniteGroup& g = *s->group;
    const OrbitData& od = orbit_data_of(s);

    for (size_t o = 0; o < od.orbits.size(); ++o) {
        int s0 = od.orbits[o][0];
        Subgroup h = make_subgroup(s->group, s->stabilizer(s0));
        TablePtr table = character_table(h.group);
        std::vector<CycMatrix> projectors = isotypic_projectors(table);

        // transversal: minimal group element moving s0 to each orbit point
        std::vector<int> trans(s->size, -1);
        for (int k = 0; k < g.order; ++k) {
            int x = s->apply(k, s0);
            if (trans[x] < 0) trans[x] = k;
        }

        for (long i = 0; i < table->num_classes(); ++i) {
            // isotypic block of the regular representation: dimension deg^2,
            // character deg * chi_i on H
            CycMatrix c = projectors[i].column_space_basis();
            CycMatrix cp = c.left_inverse();
            std::vector<CycMatrix> iso(h.group->order);
            for (int a = 0; a < h.group->order; ++a)
                iso[a] = cp * regular_rep_matrix(*h.group, a) * c;
            long d = c.cols();

            EquivariantBundle b;
            b.base = s;
            b.fibers.assign(s->size, 0);
            for (int x : od.orbits[o]) b.fibers[x] = d;
            b.maps.assign(g.order, std::vector<CycMatrix>(s->size));
            for (int k = 0; k < g.order; ++k)
                for (int x = 0; x < s->size; ++x) {
                    if (b.fibers[x] == 0) {
                        b.maps[k][x] = CycMatrix(0, 0);
                        continue;
                    }
                    int gx = s->apply(k, x);
                    // t_gx^{-1} k t_x stabilizes s0
                    int hh = g.mul[g.inv[trans[gx]]][g.mul[k][trans[x]]];
                    b.maps[k][x] = iso[h.from_parent[hh]];
                }
            b.validate();
            KBasisElement el{(int)o, (int)i, std::move(b),
                             DelocalizedCharacter::zero(kb.lambda)};
            el.ch = deloc_character(el.bundle);
            kb.elems.push_back(std::move(el));
        }
    }

    long n = (long)orbit_data_of(kb.lambda).orbits.size();
    if ((long)kb.elems.size() != n)
        throw InvariantViolation("K-basis has the wrong cardinality");
    kb.char_matrix = CycMatrix(n, n);
    for (long j = 0; j < n; ++j)
        for (long i = 0; i < n; ++i)
            kb.char_matrix.at(i, j) = kb.elems[j].ch.values[i];
    if (kb.char_matrix.rank() != n)
        throw InvariantViolation("K-basis characters are linearly dependent");
    return kb;
}

EquivariantBundle e_star(const EquivariantBundle& witness) {
    const GSetPtr& lambda = inertia_of(witness.base);
    return attach_canonical_automorphism(
        pullback(evaluation_map(lambda), witness));
}

KClass e_sharp(const EquivariantBundle& over_lambda) {
    return KClass{ch_phi(over_lambda), std::nullopt};
}

EquivariantBundle stringy_bundle_product(const EquivariantBundle& a,
                              const EquivariantBundle& b) {
    if (a.base.get() != b.base.get())
        throw std::invalid_argument("stringy bundle product: base mismatch");
    if (!a.has_phi() || !b.has_phi())
        throw std::invalid_argument("stringy bundle product: inputs must carry automorphisms");
    const TwoSectorData& ts = two_sector_of(a.base);
    return pushforward(ts.e12,
                       tensor_bundle(pullback(ts.e1, a), pullback(ts.e2, b)));
}

DelocalizedCharacter stringy_bundle_character(const EquivariantBundle& a,
                                           const EquivariantBundle& b) {
    if (a.base.get() != b.base.get())
        throw std::invalid_argument("stringy bundle product: base mismatch");
    const GSetPtr& lambda = a.base;
    const FiniteGroup& g = *lambda->group;
    std::vector<CycMatrix> phi_a =
        a.has_phi() ? a.phi : canonical_automorphism(a);
    std::vector<CycMatrix> phi_b =
        b.has_phi() ? b.phi : canonical_automorphism(b);
    const OrbitData& od = orbit_data_of(lambda);
    DelocalizedCharacter r = DelocalizedCharacter::zero(lambda);
    for (size_t o = 0; o < od.orbits.size(); ++o) {
        int p = od.orbits[o][0];
        int s = lambda->base_point[p], gg = lambda->labels[p];
        Cyclotomic sum;
        for (int g1 : lambda->source->stabilizer(s)) {
            int g2 = g.mul[g.inv[g1]][gg];
            int p1 = lambda->inertia_index(s, g1);
            int p2 = lambda->inertia_index(s, g2);
            if (p2 < 0) continue; // g2 not in the stabilizer
            sum += phi_a[p1].kron(phi_b[p2]).trace();
        }
        r.values[o] = sum;
    }
    return r;
}

DelocalizedCharacter closed_stringy_product(const DelocalizedCharacter& a,
                                            const DelocalizedCharacter& b) {
    if (a.lambda.get() != b.lambda.get())
        throw std::invalid_argument("stringy product: base mismatch");
    const GSetPtr& lambda = a.lambda;
    const FiniteGroup& g = *lambda->group;
    const OrbitData& od = orbit_data_of(lambda);
    DelocalizedCharacter r = DelocalizedCharacter::zero(lambda);
    for (size_t o = 0; o < od.orbits.size(); ++o) {
        int p = od.orbits[o][0];
        int s = lambda->base_point[p], gg = lambda->labels[p];
        Cyclotomic sum;
        for (int g1 : lambda->source->stabilizer(s)) {
            int g2 = g.mul[g.inv[g1]][gg];
            if (lambda->inertia_index(s, g2) < 0) continue;
            sum += a.at(s, g1) * b.at(s, g2);
        }
        r.values[o] = sum;
    }
    return r;
}

DelocalizedCharacter tensor_character(const DelocalizedCharacter& a,
                                      const DelocalizedCharacter& b) {
    if (a.lambda.get() != b.lambda.get())
        throw std::invalid_argument("tensor: base mismatch");
    DelocalizedCharacter r{a.lambda, a.values};
    for (size_t i = 0; i < r.values.size(); ++i) r.values[i] *= b.values[i];
    return r;
}

DelocalizedCharacter stringy_product_explicit(const KBasis& kb, int i, int j,
                                              bool dense) {
    EquivariantBundle ea = e_star(kb.elems[i].bundle);
    EquivariantBundle eb = e_star(kb.elems[j].bundle);
    if (dense) return e_sharp(stringy_bundle_product(ea, eb)).ch;
    return stringy_bundle_character(ea, eb);
}

ClassFunction ptg_to_class_function(const GroupPtr& g,
                                    const DelocalizedCharacter& c) {
    return ClassFunction::from_elements(g, [&](int x) { return c.at(0, x); });
}

DelocalizedCharacter ptg_from_class_function(const GSetPtr& pt,
                                             const ClassFunction& f) {
    const GSetPtr& lambda = inertia_of(pt);
    const OrbitData& od = orbit_data_of(lambda);
    DelocalizedCharacter r = DelocalizedCharacter::zero(lambda);
    for (size_t o = 0; o < od.orbits.size(); ++o)
        r.values[o] = f.at_element(lambda->labels[od.orbits[o][0]]);
    return r;
}

PairClassFunction gg_to_pair_function(const GroupPtr& g,
                                      const DelocalizedCharacter& c) {
    return PairClassFunction::from_pairs(
        g, [&](int s, int h) { return c.at(s, h); });
}

DelocalizedCharacter gg_from_pair_function(const GSetPtr& conj,
                                           const PairClassFunction& f) {
    const GSetPtr& lambda = inertia_of(conj);
    const OrbitData& od = orbit_data_of(lambda);
    DelocalizedCharacter r = DelocalizedCharacter::zero(lambda);
    for (size_t o = 0; o < od.orbits.size(); ++o) {
        int p = od.orbits[o][0];
        r.values[o] = f.at(lambda->base_point[p], lambda->labels[p]);
    }
    return r;
}

} // namespace stringyk
