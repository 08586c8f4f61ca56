#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "stringyk/group.hpp"

using namespace stringyk;

namespace {

std::multiset<size_t> class_sizes(const FiniteGroup& g) {
    auto cd = conjugacy(g);
    std::multiset<size_t> sizes;
    for (const auto& c : cd.classes) sizes.insert(c.size());
    return sizes;
}

} // namespace

TEST_CASE("builtin families") {
    CHECK(build_cyclic(2)->order == 2);
    CHECK(build_symmetric(3)->order == 6);
    CHECK(build_symmetric(4)->order == 24);
    CHECK(build_dihedral(4)->order == 8);
    CHECK(build_quaternion8()->order == 8);
    CHECK_THROWS_AS(build_symmetric(6), std::invalid_argument);
    CHECK_THROWS_AS(build_symmetric(5), std::invalid_argument); // 120 > default cap
    CHECK(build_symmetric(5, 128)->order == 120);
}

TEST_CASE("conjugacy classes") {
    auto z3 = build_cyclic(3);
    auto cd = conjugacy(*z3);
    CHECK(cd.classes.size() == 3);
    for (const auto& c : cd.classes) CHECK(c.size() == 1);
    for (int x = 0; x < 3; ++x) CHECK(cd.centralizers[x].size() == 3);

    CHECK(class_sizes(*build_symmetric(3)) == std::multiset<size_t>({1, 3, 2}));
    CHECK(class_sizes(*build_quaternion8()) == std::multiset<size_t>({1, 1, 2, 2, 2}));

    // |class| * |centralizer| = |G|, classes partition
    for (auto g : {build_symmetric(4), build_dihedral(6), build_quaternion8()}) {
        auto c = conjugacy(*g);
        size_t total = 0;
        for (const auto& cls : c.classes) {
            total += cls.size();
            for (int x : cls)
                CHECK((long)(cls.size() * c.centralizers[x].size()) == g->order);
        }
        CHECK((long)total == g->order);
    }
}

TEST_CASE("permutation generators") {
    // {(12),(123)} generates S3
    auto g = build_from_permutations({{1, 0, 2}, {1, 2, 0}});
    CHECK(g->order == 6);
    CHECK(class_sizes(*g) == class_sizes(*build_symmetric(3)));
    CHECK_THROWS_AS(build_from_permutations({{1, 2, 3, 4, 5, 6, 0}}, 5),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_from_permutations({{0, 0, 1}}), std::invalid_argument);
}

TEST_CASE("explicit table validation") {
    // valid Z2
    auto z2 = build_from_table({{0, 1}, {1, 0}});
    CHECK(z2->order == 2);
    // broken associativity / structure is rejected
    CHECK_THROWS(build_from_table({{0, 1}, {1, 1}}));
}

TEST_CASE("commuting pairs") {
    CHECK(commuting_pairs(build_cyclic(2))->size == 4);
    CHECK(commuting_pairs(build_symmetric(3))->size == 18);
    CHECK(commuting_pairs(build_quaternion8())->size == 40);
    // Burnside count: |G-tilde| = |G| * #classes
    for (auto g : {build_cyclic(6), build_symmetric(4), build_dihedral(5)}) {
        auto cp = commuting_pairs(g);
        cp->validate();
        CHECK(cp->size == g->order * (long)conjugacy(*g).classes.size());
    }
}

TEST_CASE("inertia sets") {
    auto s3 = build_symmetric(3);
    auto lam_pt = inertia_set(point_set(s3));
    CHECK(lam_pt->size == 6); // Lambda of a point is G with conjugation
    lam_pt->validate();
    auto orbs = lam_pt->orbits();
    CHECK(orbs.size() == conjugacy(*s3).classes.size());

    auto lam_left = inertia_set(left_translation_set(s3));
    CHECK(lam_left->size == 6); // only (s, e)
    for (int i = 0; i < lam_left->size; ++i) CHECK(lam_left->labels[i] == s3->identity);

    // double inertia point count equals direct triple enumeration
    auto conj = conjugation_set(s3);
    auto lam = inertia_set(conj);
    auto lam2 = inertia_set(lam);
    long triples = 0;
    for (int s = 0; s < conj->size; ++s)
        for (int g1 = 0; g1 < s3->order; ++g1)
            for (int g2 = 0; g2 < s3->order; ++g2)
                if (conj->act[g1][s] == s && conj->act[g2][s] == s &&
                    s3->conj(g2, g1) == g1)
                    ++triples;
    CHECK(lam2->size == triples);
}

TEST_CASE("subgroups") {
    auto s3 = build_symmetric(3);
    auto cd = conjugacy(*s3);
    int transposition = cd.classes[2][0]; // class of size 3
    auto z = centralizer_subgroup(s3, transposition);
    CHECK(z.group->order == 2);
    auto h = generated_subgroup(s3, {transposition});
    CHECK(h.group->order == 2);
    int threecycle = cd.classes[1][0];
    CHECK(generated_subgroup(s3, {threecycle}).group->order == 3);
    CHECK(generated_subgroup(s3, {transposition, threecycle}).group->order == 6);
    CHECK_THROWS_AS(make_subgroup(s3, {0, threecycle}), std::invalid_argument);

    // generating sets are small and generate
    for (auto g : {build_symmetric(4), build_quaternion8(), build_cyclic(12)}) {
        auto gens = generating_set(*g);
        CHECK(generated_subgroup(g, gens).group->order == g->order);
        CHECK(gens.size() <= 3);
    }
}
