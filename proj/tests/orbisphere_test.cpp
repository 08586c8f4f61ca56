#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stringyk/group.hpp"
#include "stringyk/orbisphere.hpp"

using namespace stringyk;

namespace {

std::vector<Cyclotomic> scale_vec(const std::vector<Cyclotomic>& v,
                                  const Rational& c) {
    std::vector<Cyclotomic> r = v;
    for (auto& x : r) x *= Cyclotomic(c);
    return r;
}

} // namespace

TEST_CASE("sector inventory and ages") {
    OrbisphereModel m23 = build_orbisphere(2, 3);
    CHECK(m23.age_x == std::vector<Rational>{Rational(1, 2)});
    CHECK(m23.age_y == std::vector<Rational>{Rational(2, 3), Rational(1, 3)});

    OrbisphereModel m11 = build_orbisphere(1, 1);
    CHECK(m11.age_x.empty());
    CHECK(m11.age_y.empty());

    OrbisphereModel m35 = build_orbisphere(3, 5);
    CHECK(m35.age_x.size() == 2);
    CHECK(m35.age_y.size() == 4);

    OrbisphereModel m34 = build_orbisphere(3, 4);
    CHECK(m34.age_x == std::vector<Rational>{Rational(1, 3), Rational(2, 3)});

    CHECK_THROWS_AS(build_orbisphere(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(build_orbisphere(6, 9), std::invalid_argument);
    CHECK_THROWS_AS(build_orbisphere(0, 1), std::invalid_argument);
}

TEST_CASE("ages of inverse sectors pair to 1") {
    for (auto [p, q] : {std::pair<long, long>{2, 3}, {3, 4}, {3, 5}, {4, 5}}) {
        OrbisphereModel m = build_orbisphere(p, q);
        for (long k = 1; k < p; ++k)
            CHECK(m.age_x[k - 1] + m.age_x[p - k - 1] == Rational(1));
        for (long l = 1; l < q; ++l)
            CHECK(m.age_y[l - 1] + m.age_y[q - l - 1] == Rational(1));
    }
}

TEST_CASE("Chen-Ruan structure constants") {
    SUBCASE("cross-point products vanish") {
        for (auto [p, q] : {std::pair<long, long>{2, 3}, {3, 5}}) {
            OrbisphereRing r = cr_ring(build_orbisphere(p, q));
            for (long k = 1; k < p; ++k)
                for (long l = 1; l < q; ++l) {
                    auto prod = r.multiply(r.basis_vector(r.alpha_index(k)),
                                           r.basis_vector(r.beta_index(l)));
                    CHECK(prod == std::vector<Cyclotomic>(r.dim));
                }
        }
    }

    SUBCASE("closing onto the point class, weight 2 3") {
        OrbisphereRing r = cr_ring(build_orbisphere(2, 3));
        auto a1 = r.basis_vector(r.alpha_index(1));
        CHECK(r.multiply(a1, a1) ==
              scale_vec(r.basis_vector(1), Rational(1, 2)));
        auto b1 = r.basis_vector(r.beta_index(1));
        auto b2 = r.basis_vector(r.beta_index(2));
        CHECK(r.multiply(b1, b2) ==
              scale_vec(r.basis_vector(1), Rational(1, 3)));
    }

    SUBCASE("wrap without closing kills the product") {
        // weights (3,4): age(alpha_1) = 1/3, age(alpha_2) = 2/3
        OrbisphereRing r = cr_ring(build_orbisphere(3, 4));
        auto a1 = r.basis_vector(r.alpha_index(1));
        auto a2 = r.basis_vector(r.alpha_index(2));
        CHECK(r.multiply(a1, a1) == a2);
        CHECK(r.multiply(a2, a2) == std::vector<Cyclotomic>(r.dim));
    }

    SUBCASE("point class is nilpotent and annihilates twisted sectors") {
        OrbisphereRing r = cr_ring(build_orbisphere(3, 5));
        auto t = r.basis_vector(1);
        CHECK(r.multiply(t, t) == std::vector<Cyclotomic>(r.dim));
        for (long i = 1; i < r.dim; ++i)
            CHECK(r.multiply(t, r.basis_vector(i)) ==
                  std::vector<Cyclotomic>(r.dim));
    }

    SUBCASE("unit") {
        OrbisphereRing r = cr_ring(build_orbisphere(3, 4));
        for (long i = 0; i < r.dim; ++i) {
            CHECK(r.multiply(r.basis_vector(0), r.basis_vector(i)) ==
                  r.basis_vector(i));
        }
    }
}

TEST_CASE("orbifold pairing") {
    for (auto [p, q] : {std::pair<long, long>{2, 3}, {3, 4}, {3, 5}}) {
        OrbisphereModel m = build_orbisphere(p, q);
        OrbisphereRing r = cr_ring(m);
        CycMatrix g = cr_pairing(m);

        CHECK(g.rank() == r.dim); // nondegenerate
        CHECK(g.at(0, 1) == Cyclotomic(1));
        for (long k = 1; k < p; ++k)
            CHECK(g.at(r.alpha_index(k), r.alpha_index(p - k)) ==
                  Cyclotomic(Rational(1, p)));

        // Frobenius property: <x y, z> = <x, y z> over all basis triples
        auto pair_with = [&](const std::vector<Cyclotomic>& a,
                             const std::vector<Cyclotomic>& b) {
            Cyclotomic s;
            for (long i = 0; i < r.dim; ++i)
                for (long j = 0; j < r.dim; ++j)
                    if (!g.at(i, j).is_zero()) s += a[i] * b[j] * g.at(i, j);
            return s;
        };
        for (long i = 0; i < r.dim; ++i)
            for (long j = 0; j < r.dim; ++j)
                for (long k = 0; k < r.dim; ++k)
                    CHECK(pair_with(r.table[i][j], r.basis_vector(k)) ==
                          pair_with(r.basis_vector(i), r.table[j][k]));
    }
}

TEST_CASE("degree additivity of the CR product") {
    for (auto [p, q] : {std::pair<long, long>{2, 3}, {3, 4}, {4, 5}}) {
        OrbisphereModel m = build_orbisphere(p, q);
        OrbisphereRing r = cr_ring(m);
        // deg 1 = 0, deg t = 2, deg alpha_k = 2 age, deg beta_l = 2 age
        std::vector<Rational> deg(r.dim);
        deg[1] = Rational(2);
        for (long k = 1; k < p; ++k)
            deg[r.alpha_index(k)] = Rational(2) * m.age_x[k - 1];
        for (long l = 1; l < q; ++l)
            deg[r.beta_index(l)] = Rational(2) * m.age_y[l - 1];
        for (long i = 0; i < r.dim; ++i)
            for (long j = 0; j < r.dim; ++j)
                for (long t = 0; t < r.dim; ++t)
                    if (!r.table[i][j][t].is_zero())
                        CHECK(deg[i] + deg[j] == deg[t]);
    }
}

TEST_CASE("ring axioms, both conventions") {
    for (auto [p, q] :
         {std::pair<long, long>{1, 1}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}) {
        OrbisphereModel m = build_orbisphere(p, q);
        CHECK_NOTHROW(check_ring_axioms(cr_ring(m)));
        CHECK_NOTHROW(check_ring_axioms(stringy_k_table(m)));
    }
}

TEST_CASE("stringy K-ring relations") {
    for (auto [p, q] : {std::pair<long, long>{2, 3}, {3, 4}, {3, 5}}) {
        KRingReport rep = stringy_k_ring(build_orbisphere(p, q));
        CHECK(rep.alpha_relation);
        CHECK(rep.beta_relation);
        CHECK(rep.u_relation);
        // generators are the sectors of age 1/p and 1/q
        CHECK(rep.ring.model.age_x[rep.alpha_gen - 1] == Rational(1, p));
        CHECK(rep.ring.model.age_y[rep.beta_gen - 1] == Rational(1, q));
    }

    SUBCASE("generator powers step through every sector once") {
        KRingReport rep = stringy_k_ring(build_orbisphere(3, 5));
        const OrbisphereRing& r = rep.ring;
        auto a = r.basis_vector(r.alpha_index(rep.alpha_gen));
        auto acc = a;
        std::vector<bool> seen(r.dim, false);
        for (long e = 1; e < 3; ++e) {
            long nz = 0, where = -1;
            for (long i = 0; i < r.dim; ++i)
                if (!acc[i].is_zero()) { ++nz; where = i; }
            CHECK(nz == 1);
            CHECK(acc[where] == Cyclotomic(1));
            CHECK(!seen[where]);
            seen[where] = true;
            acc = r.multiply(acc, a);
        }
        CHECK(acc == r.basis_vector(1)); // alpha^3 = t = 1 - u
    }

    SUBCASE("cross-point generator product vanishes") {
        KRingReport rep = stringy_k_ring(build_orbisphere(3, 5));
        const OrbisphereRing& r = rep.ring;
        auto a = r.basis_vector(r.alpha_index(rep.alpha_gen));
        auto b = r.basis_vector(r.beta_index(rep.beta_gen));
        CHECK(r.multiply(a, b) == std::vector<Cyclotomic>(r.dim));
    }

    SUBCASE("smooth sphere") {
        KRingReport rep = stringy_k_ring(build_orbisphere(1, 1));
        CHECK(rep.ring.dim == 2);
        CHECK(rep.alpha_gen == 0);
        CHECK(rep.u_relation); // C[u]/<(1-u)^2>
    }
}
