#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stringyk/local_model.hpp"

using namespace stringyk;

namespace {

int element_of_order(const GroupPtr& g, long n) {
    for (int x = 0; x < g->order; ++x)
        if (g->element_order(x) == n) return x;
    REQUIRE(false);
    return -1;
}

} // namespace

TEST_CASE("cyclotomic square roots") {
    for (long m : {1, 2, 3, 4, 5, 6, 7, 8, 12, 15, 24}) {
        Cyclotomic r = cyclotomic_sqrt(m);
        CHECK(r * r == Cyclotomic(m));
    }
    CHECK(cyclotomic_sqrt(4) == Cyclotomic(2));
}

TEST_CASE("model validation") {
    auto z2 = build_cyclic(2);
    CycMatrix id = CycMatrix::identity(1), neg = id.scale(Cyclotomic(-1));
    CHECK_NOTHROW(make_model(z2, {id, neg}));
    // not a homomorphism: x^2 = e but rho(x)^2 != I
    CycMatrix half(1, 1);
    half.at(0, 0) = Cyclotomic(Rational(1, 2));
    CHECK_THROWS_AS(make_model(z2, {id, half}), std::invalid_argument);
    // not unitary but multiplicative: rho(x) = 2 fails unitarity first
    CycMatrix two = id.scale(Cyclotomic(2));
    CHECK_THROWS_AS(make_model(z2, {id, two}), std::invalid_argument);
}

TEST_CASE("builtin models have the expected characters") {
    // standard = permutation - trivial for symmetric groups
    for (long n : {2, 3, 4}) {
        UnitaryModel std_m = symmetric_standard_model(n);
        UnitaryModel perm_m = symmetric_perm_model(n);
        for (int a = 0; a < std_m.group->order; ++a)
            CHECK(std_m.at(a).trace() + Cyclotomic(1) == perm_m.at(a).trace());
    }
    UnitaryModel reg = regular_model(build_symmetric(3));
    for (int a = 0; a < 6; ++a)
        CHECK(reg.at(a).trace() == Cyclotomic(a == reg.group->identity ? 6 : 0));
    CHECK_NOTHROW(quaternion_standard_model());
    CHECK_NOTHROW(dihedral_standard_model(5));
    CHECK_NOTHROW(dihedral_perm_model(4));
}

TEST_CASE("sector data examples") {
    UnitaryModel z3 = cyclic_weights_model(3, {1});
    SectorDatum s = sector_data(z3, 1);
    CHECK(s.fixed_dim == 0);
    CHECK(s.angles ==
          std::vector<std::pair<Rational, long>>({{Rational(1, 3), 1}}));
    CHECK(s.age == Rational(1, 3));

    UnitaryModel z2 = cyclic_weights_model(2, {1, 1}); // -I on C^2
    SectorDatum t = sector_data(z2, 1);
    CHECK(t.fixed_dim == 0);
    CHECK(t.angles ==
          std::vector<std::pair<Rational, long>>({{Rational(1, 2), 2}}));
    CHECK(t.age == Rational(1));

    UnitaryModel s3 = symmetric_standard_model(3);
    int c3 = element_of_order(s3.group, 3);
    SectorDatum u = sector_data(s3, c3);
    CHECK(u.fixed_dim == 0);
    CHECK(u.angles == std::vector<std::pair<Rational, long>>(
                          {{Rational(1, 3), 1}, {Rational(2, 3), 1}}));
    CHECK(u.age == Rational(1));
}

TEST_CASE("multiplicity formula matches matrix kernels") {
    std::vector<UnitaryModel> suite;
    suite.push_back(cyclic_weights_model(6, {1, 2, 3}));
    suite.push_back(cyclic_weights_model(8, {3, 5}));
    suite.push_back(symmetric_standard_model(4));
    suite.push_back(dihedral_standard_model(4));
    suite.push_back(quaternion_standard_model());
    suite.push_back(regular_model(build_cyclic(5)));
    for (const UnitaryModel& m : suite) {
        for (int g = 0; g < m.group->order; ++g) {
            long ord = m.group->element_order(g);
            SectorDatum s = sector_data(m, g);
            for (long k = 0; k < ord; ++k) {
                CycMatrix shifted =
                    m.at(g) - CycMatrix::identity(m.dim)
                                  .scale(Cyclotomic::root_of_unity(ord, k));
                long kern = shifted.kernel_basis().cols();
                long expect = 0;
                if (k == 0) expect = s.fixed_dim;
                else
                    for (const auto& [theta, mult] : s.angles)
                        if (theta == Rational(k, ord)) expect = mult;
                CHECK(kern == expect);
            }
        }
    }
}

TEST_CASE("age pairing") {
    std::vector<UnitaryModel> suite;
    suite.push_back(cyclic_weights_model(12, {1, 5, 8}));
    suite.push_back(symmetric_standard_model(4));
    suite.push_back(quaternion_standard_model());
    suite.push_back(dihedral_standard_model(6));
    for (const UnitaryModel& m : suite)
        for (int g = 0; g < m.group->order; ++g) {
            SectorDatum a = sector_data(m, g);
            SectorDatum b = sector_data(m, m.group->inv[g]);
            CHECK(a.age + b.age == Rational(m.dim - a.fixed_dim));
            CHECK(a.fixed_dim == b.fixed_dim);
        }
}

TEST_CASE("fractional normal classes") {
    UnitaryModel z3 = cyclic_weights_model(3, {1});
    FractionalNormal phi = fractional_normal(z3, 1, Direction::Phi);
    FractionalNormal phi_inv = fractional_normal(z3, 1, Direction::PhiInverse);
    // (1/3) resp. (2/3) times the weight-1 character a -> zeta_3^a
    ClassFunction w1 = ClassFunction::from_elements(
        phi.centralizer->group, [](int a) { return Cyclotomic::root_of_unity(3, a); });
    CHECK(phi.chi.to_class_function() == w1.scale(Cyclotomic(Rational(1, 3))));
    CHECK(phi_inv.chi.to_class_function() == w1.scale(Cyclotomic(Rational(2, 3))));
    CHECK(phi.chi.is_rational());
    CHECK_FALSE(phi.chi.is_integral());

    UnitaryModel trivial = cyclic_weights_model(4, {0, 0});
    for (int g = 0; g < 4; ++g) {
        FractionalNormal f = fractional_normal(trivial, g, Direction::Phi);
        CHECK(f.chi.to_class_function() ==
              ClassFunction::zero(f.centralizer->group));
    }
}

TEST_CASE("obstruction characters on Z3") {
    UnitaryModel z3 = cyclic_weights_model(3, {1});
    ObstructionDatum d = obstruction_character(z3, 1, 1);
    REQUIRE(d.components.size() == 1);
    CHECK(d.components[0].theta1 == Rational(1, 3));
    CHECK(d.components[0].theta2 == Rational(1, 3));
    CHECK(d.components[0].theta12 == Rational(1, 3));
    CHECK(d.total.rank() == Cyclotomic(0));

    ObstructionDatum e = obstruction_character(z3, 2, 2);
    REQUIRE(e.components.size() == 1);
    CHECK(e.components[0].theta1 == Rational(2, 3));
    CHECK(e.components[0].theta12 == Rational(2, 3));
    CHECK(e.total.rank() == Cyclotomic(1));
    ClassFunction w1 = ClassFunction::from_elements(
        e.k->group, [](int a) { return Cyclotomic::root_of_unity(3, a); });
    CHECK(e.total.to_class_function() == w1);
}

TEST_CASE("obstruction vanishes against the identity") {
    for (UnitaryModel m : {cyclic_weights_model(6, {1, 4}),
                           symmetric_standard_model(3),
                           quaternion_standard_model()}) {
        for (int g = 0; g < m.group->order; ++g) {
            ObstructionDatum d =
                obstruction_character(m, m.group->identity, g);
            CHECK(d.total.rank() == Cyclotomic(0));
            for (long i = 0; i < (long)d.total.mult.size(); ++i)
                CHECK(d.total.mult[i].is_zero());
        }
    }
}

TEST_CASE("Z5 wrap rule over all pairs") {
    UnitaryModel z5 = cyclic_weights_model(5, {1});
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
            ObstructionDatum d = obstruction_character(z5, a, b);
            // rank 1 exactly when the angles wrap strictly: theta1 + theta2 > 1
            long expect = a + b > 5 ? 1 : 0;
            CHECK(d.total.rank() == Cyclotomic(expect));
        }
}

TEST_CASE("obstruction symmetry and genuineness over model suite") {
    std::vector<UnitaryModel> suite;
    suite.push_back(symmetric_standard_model(3));
    suite.push_back(dihedral_standard_model(4));
    suite.push_back(quaternion_standard_model());
    suite.push_back(cyclic_weights_model(8, {1, 3, 6}));
    for (const UnitaryModel& m : suite)
        for (int a = 0; a < m.group->order; ++a)
            for (int b = 0; b < m.group->order; ++b) {
                // construction asserts genuineness and the component identity
                ObstructionDatum ab = obstruction_character(m, a, b);
                ObstructionDatum ba = obstruction_character(m, b, a);
                CHECK(ab.total.mult == ba.total.mult);
            }
}

TEST_CASE("sector reports") {
    UnitaryModel z2 = cyclic_weights_model(2, {1});
    SectorReport r = sector_report(z2);
    REQUIRE(r.sectors.size() == 2);
    CHECK(r.sectors[0].age == Rational(0));
    CHECK(r.sectors[1].age == Rational(1, 2));
    CHECK(r.pairs.size() == 4);

    SectorReport s3 = sector_report(symmetric_standard_model(3));
    CHECK(s3.sectors.size() == 3);
    CHECK(s3.pairs.size() == pair_space_of(build_symmetric(3)).orbits.size());
}
