#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "stringyk/character_table.hpp"

using namespace stringyk;

namespace {

// ---- independent oracle -------------------------------------------------
//
// Recovers the character table from scratch by exact linear algebra over the
// cyclotomic field: splits class space into common eigenlines of the class
// matrices, trying every candidate eigenvalue |C_i|/d * (sum of d roots of
// unity of the right order). Exponential in the degree, so only usable for
// small groups, but shares no code path with the modular method.

std::vector<Cyclotomic> candidate_sums(long m, int d) {
    std::vector<Cyclotomic> roots;
    for (long k = 0; k < m; ++k) roots.push_back(Cyclotomic::root_of_unity(m, k));
    std::vector<Cyclotomic> sums;
    std::vector<int> pick(d, 0);
    while (true) {
        Cyclotomic s;
        for (int t = 0; t < d; ++t) s += roots[pick[t]];
        sums.push_back(s);
        int pos = d - 1;
        while (pos >= 0 && pick[pos] == m - 1) --pos;
        if (pos < 0) break;
        ++pick[pos];
        for (int t = pos + 1; t < d; ++t) pick[t] = pick[pos]; // multisets only
    }
    std::sort(sums.begin(), sums.end(),
              [](const Cyclotomic& a, const Cyclotomic& b) {
                  return Cyclotomic::compare(a, b) < 0;
              });
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    return sums;
}

std::vector<ClassFunction> oracle_table(const GroupPtr& gp, int max_degree) {
    const FiniteGroup& g = *gp;
    const auto& cd = conjugacy_of(gp);
    long r = (long)cd.classes.size();

    std::vector<CycMatrix> class_mats;
    for (long i = 0; i < r; ++i) {
        CycMatrix m(r, r);
        for (long k = 0; k < r; ++k) {
            int zk = cd.classes[k][0];
            for (int x : cd.classes[i]) {
                int y = g.mul[g.inv[x]][zk];
                m.at(cd.class_of[y], k) += Cyclotomic(1);
            }
        }
        class_mats.push_back(std::move(m));
    }

    std::vector<CycMatrix> spaces;
    {
        spaces.push_back(CycMatrix::identity(r));
    }
    for (long i = 0; i < r && (long)spaces.size() < r; ++i) {
        long m = g.element_order(cd.classes[i][0]);
        Cyclotomic csize((long)cd.classes[i].size());
        std::vector<CycMatrix> next;
        for (const CycMatrix& b : spaces) {
            if (b.cols() == 1) {
                next.push_back(b);
                continue;
            }
            CycMatrix c = b.solve(class_mats[i] * b); // restriction of M_i
            // distinct candidate eigenvalues |C_i| * (sum of d roots) / d
            std::vector<Cyclotomic> candidates;
            for (int d = 1; d <= max_degree; ++d) {
                Cyclotomic inv_d = Cyclotomic(Rational(1, d));
                for (const Cyclotomic& s : candidate_sums(m, d))
                    candidates.push_back(csize * s * inv_d);
            }
            std::sort(candidates.begin(), candidates.end(),
                      [](const Cyclotomic& a, const Cyclotomic& b2) {
                          return Cyclotomic::compare(a, b2) < 0;
                      });
            candidates.erase(std::unique(candidates.begin(), candidates.end()),
                             candidates.end());
            long found = 0;
            for (const Cyclotomic& lam : candidates) {
                if (found == b.cols()) break;
                CycMatrix shifted = c - CycMatrix::identity(b.cols()).scale(lam);
                CycMatrix ker = shifted.kernel_basis();
                if (ker.cols() == 0) continue;
                next.push_back(b * ker);
                found += ker.cols();
            }
            REQUIRE(found == b.cols());
        }
        spaces = std::move(next);
    }
    REQUIRE((long)spaces.size() == r);

    std::vector<int> inverse_class(r);
    for (long i = 0; i < r; ++i)
        inverse_class[i] = cd.class_of[g.inv[cd.classes[i][0]]];

    std::vector<ClassFunction> rows;
    for (const CycMatrix& line : spaces) {
        REQUIRE(line.cols() == 1);
        long nz = 0;
        while (line.at(nz, 0).is_zero()) ++nz;
        Cyclotomic pivot_inv = line.at(nz, 0).inverse();
        std::vector<Cyclotomic> omega(r);
        for (long i = 0; i < r; ++i) {
            Cyclotomic s;
            for (long j = 0; j < r; ++j)
                s += class_mats[i].at(nz, j) * line.at(j, 0);
            omega[i] = s * pivot_inv;
        }
        Cyclotomic denom;
        for (long i = 0; i < r; ++i)
            denom += omega[i] * omega[inverse_class[i]] *
                     Cyclotomic(Rational(1, (long)cd.classes[i].size()));
        Cyclotomic d2 = Cyclotomic((long)g.order) / denom;
        REQUIRE(d2.is_rational());
        long deg = -1;
        for (long d = 1; d * d <= g.order; ++d)
            if (Rational(d * d) == d2.rational_value()) { deg = d; break; }
        REQUIRE(deg >= 1);
        std::vector<Cyclotomic> vals(r);
        for (long i = 0; i < r; ++i)
            vals[i] = Cyclotomic(deg) * omega[i] *
                      Cyclotomic(Rational(1, (long)cd.classes[i].size()));
        rows.push_back(ClassFunction(gp, std::move(vals)));
    }
    std::sort(rows.begin(), rows.end(), [&](const ClassFunction& a,
                                            const ClassFunction& b) {
        int ca = Cyclotomic::compare(a.at_element(gp->identity),
                                     b.at_element(gp->identity));
        if (ca != 0) return ca < 0;
        for (long c = 0; c < r; ++c) {
            int cmp = Cyclotomic::compare(a.at_class((int)c), b.at_class((int)c));
            if (cmp != 0) return cmp > 0;
        }
        return false;
    });
    return rows;
}

GroupPtr build_a4() {
    return build_from_permutations({{1, 0, 3, 2}, {1, 2, 0, 3}});
}

} // namespace

TEST_CASE("small abelian tables") {
    auto z2 = build_cyclic(2);
    auto t = character_table(z2);
    REQUIRE(t->num_classes() == 2);
    CHECK(t->irreducibles[0].values() ==
          std::vector<Cyclotomic>({Cyclotomic(1), Cyclotomic(1)}));
    CHECK(t->irreducibles[1].values() ==
          std::vector<Cyclotomic>({Cyclotomic(1), Cyclotomic(-1)}));

    auto z3 = build_cyclic(3);
    auto t3 = character_table(z3);
    Cyclotomic w = Cyclotomic::root_of_unity(3, 1);
    bool found_w = false, found_w2 = false;
    for (const auto& row : t3->irreducibles) {
        if (row.at_element(1) == w) found_w = true;
        if (row.at_element(1) == w * w) found_w2 = true;
    }
    CHECK(found_w);
    CHECK(found_w2);
}

TEST_CASE("S3 table") {
    auto s3 = build_symmetric(3);
    auto t = character_table(s3);
    CHECK(t->degrees == std::vector<long>({1, 1, 2}));
    // class order: (e), 3-cycles, transpositions
    CHECK(t->irreducibles[2].values() ==
          std::vector<Cyclotomic>({Cyclotomic(2), Cyclotomic(-1), Cyclotomic(0)}));
    // sign character
    bool has_sign = false;
    for (const auto& row : t->irreducibles)
        if (row.values() == std::vector<Cyclotomic>(
                                {Cyclotomic(1), Cyclotomic(1), Cyclotomic(-1)}))
            has_sign = true;
    CHECK(has_sign);
}

TEST_CASE("Q8 and D4 degrees") {
    auto q8 = character_table(build_quaternion8());
    CHECK(q8->degrees == std::vector<long>({1, 1, 1, 1, 2}));
    auto d4 = character_table(build_dihedral(4));
    CHECK(d4->degrees == std::vector<long>({1, 1, 1, 1, 2}));
}

TEST_CASE("degree sums and orthogonality survive construction") {
    for (auto g : {build_cyclic(12), build_dihedral(5), build_dihedral(6),
                   build_symmetric(4), build_a4()}) {
        auto t = character_table(g);
        long s = 0;
        for (long d : t->degrees) s += d * d;
        CHECK(s == g->order);
    }
}

TEST_CASE("matches the eigenline oracle") {
    struct Case { GroupPtr g; int max_degree; };
    for (auto [g, maxd] : std::initializer_list<Case>{
             {build_cyclic(2), 1},
             {build_cyclic(3), 1},
             {build_cyclic(4), 1},
             {build_symmetric(3), 2},
             {build_dihedral(4), 2},
             {build_quaternion8(), 2},
             {build_cyclic(6), 1},
             {build_dihedral(5), 2},
             {build_a4(), 3}}) {
        auto t = character_table(g);
        auto oracle = oracle_table(g, maxd);
        REQUIRE((long)oracle.size() == t->num_classes());
        // both sides sorted by (degree, values); compare row by row
        std::vector<ClassFunction> dixon = t->irreducibles;
        for (size_t i = 0; i < oracle.size(); ++i)
            CHECK(dixon[i] == oracle[i]);
    }
}

TEST_CASE("decompose the regular and delta characters") {
    for (auto g : {build_symmetric(3), build_quaternion8(), build_cyclic(5)}) {
        auto t = character_table(g);
        ClassFunction reg = ClassFunction::from_elements(g, [&](int x) {
            return Cyclotomic(x == g->identity ? g->order : 0);
        });
        VirtualCharacter vr = decompose(reg, t);
        CHECK(vr.is_genuine());
        for (long i = 0; i < t->num_classes(); ++i)
            CHECK(vr.mult[i] == Cyclotomic(t->degrees[i]));
        CHECK(vr.to_class_function() == reg);
        CHECK(vr.rank() == Cyclotomic(g->order));

        VirtualCharacter vd = decompose(ClassFunction::delta_identity(g), t);
        CHECK_FALSE(vd.is_integral());
        CHECK(vd.is_rational());
        for (long i = 0; i < t->num_classes(); ++i)
            CHECK(vd.mult[i] ==
                  Cyclotomic(Rational(t->degrees[i], g->order)));
    }
}

TEST_CASE("virtual character arithmetic") {
    auto g = build_symmetric(3);
    auto t = character_table(g);
    VirtualCharacter a{t, {Cyclotomic(1), Cyclotomic(0), Cyclotomic(2)}};
    VirtualCharacter b{t, {Cyclotomic(0), Cyclotomic(1), Cyclotomic(-2)}};
    VirtualCharacter s = a + b;
    CHECK(s.mult == std::vector<Cyclotomic>(
                        {Cyclotomic(1), Cyclotomic(1), Cyclotomic(0)}));
    CHECK(s.is_genuine());
    CHECK_FALSE(b.is_genuine());
    CHECK(b.is_integral());
    VirtualCharacter d = a - b;
    CHECK(d.mult[2] == Cyclotomic(4));
    CHECK(decompose(a.to_class_function(), t).mult == a.mult);
}

TEST_CASE("isotypic projectors") {
    for (auto g : {build_cyclic(3), build_symmetric(3), build_quaternion8()}) {
        auto t = character_table(g);
        auto ps = isotypic_projectors(t);
        REQUIRE((long)ps.size() == t->num_classes());
        CycMatrix sum(g->order, g->order);
        for (size_t i = 0; i < ps.size(); ++i) {
            CHECK(ps[i] * ps[i] == ps[i]);
            CHECK(ps[i].trace() ==
                  Cyclotomic(t->degrees[i] * t->degrees[i]));
            CHECK(ps[i].rank() == t->degrees[i] * t->degrees[i]);
            for (size_t j = 0; j < i; ++j)
                CHECK((ps[i] * ps[j]).is_zero());
            sum = sum + ps[i];
        }
        CHECK(sum == CycMatrix::identity(g->order));
        // projectors commute with the regular representation
        CycMatrix rho = regular_rep_matrix(*g, g->order > 1 ? 1 : 0);
        for (const auto& p : ps) CHECK(p * rho == rho * p);
    }
}

TEST_CASE("regular representation matrices") {
    auto g = build_symmetric(3);
    for (int x = 0; x < g->order; ++x) {
        CycMatrix m = regular_rep_matrix(*g, x);
        CHECK(m.trace() == Cyclotomic(x == g->identity ? g->order : 0));
        for (int y = 0; y < g->order; ++y)
            CHECK(regular_rep_matrix(*g, g->mul[x][y]) ==
                  m * regular_rep_matrix(*g, y));
    }
}
