#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stringyk/class_function.hpp"

using namespace stringyk;

namespace {

// the unique nontrivial element of Z2
constexpr int kX = 1;

PairClassFunction indicator_first_slot(const GroupPtr& g, int elem) {
    return PairClassFunction::from_pairs(
        g, [&](int s, int) { return Cyclotomic(s == elem ? 1 : 0); });
}

} // namespace

TEST_CASE("pointwise products") {
    auto z2 = build_cyclic(2);
    ClassFunction sign(z2, {Cyclotomic(1), Cyclotomic(-1)});
    ClassFunction triv(z2, {Cyclotomic(1), Cyclotomic(1)});
    CHECK(pointwise(sign, sign) == triv);
    CHECK(pointwise(triv, sign) == sign);

    auto s3 = build_symmetric(3);
    // class order: (e), 3-cycles, transpositions
    ClassFunction chi_std(s3, {Cyclotomic(2), Cyclotomic(-1), Cyclotomic(0)});
    ClassFunction sq = pointwise(chi_std, chi_std);
    CHECK(sq.values() ==
          std::vector<Cyclotomic>({Cyclotomic(4), Cyclotomic(1), Cyclotomic(0)}));
}

TEST_CASE("convolution") {
    auto z2 = build_cyclic(2);
    ClassFunction sign(z2, {Cyclotomic(1), Cyclotomic(-1)});
    CHECK(convolution(sign, sign) == sign.scale(Cyclotomic(2)));
    ClassFunction de = ClassFunction::delta_identity(z2);
    CHECK(convolution(de, sign) == sign);

    for (auto g : {build_cyclic(4), build_symmetric(3), build_quaternion8()}) {
        ClassFunction triv = ClassFunction::from_elements(
            g, [](int) { return Cyclotomic(1); });
        CHECK(convolution(triv, triv) == triv.scale(Cyclotomic(g->order)));
        // delta_e is the convolution unit
        ClassFunction d = ClassFunction::delta_identity(g);
        for (int c = 0; c < triv.num_classes(); ++c) {
            ClassFunction f = ClassFunction::indicator(g, c);
            CHECK(convolution(d, f) == f);
            CHECK(convolution(f, d) == f);
        }
    }
}

TEST_CASE("pair products on Z2: three products differ") {
    auto z2 = build_cyclic(2);
    PairClassFunction f = indicator_first_slot(z2, kX);
    PairClassFunction fe = indicator_first_slot(z2, 0);

    CHECK(pointwise(f, f) == f);
    CHECK(pair_pontryagin(f, f) == fe);
    CHECK(pair_conv_second(f, f) == f.scale(Cyclotomic(2)));

    PairClassFunction one = PairClassFunction::constant(z2, Cyclotomic(1));
    CHECK(pair_conv_second(one, one) == one.scale(Cyclotomic(2)));
}

TEST_CASE("pair product units") {
    for (auto g : {build_cyclic(3), build_symmetric(3), build_dihedral(4)}) {
        const PairSpace& ps = pair_space_of(g);
        // delta at (g, e) summed over sectors: unit for *_2
        PairClassFunction unit2 = PairClassFunction::from_pairs(
            g, [&](int, int h) { return Cyclotomic(h == g->identity ? 1 : 0); });
        // delta at (e, h): unit for pontryagin
        PairClassFunction unitp = PairClassFunction::from_pairs(
            g, [&](int s, int) { return Cyclotomic(s == g->identity ? 1 : 0); });
        for (size_t o = 0; o < ps.orbits.size(); ++o) {
            PairClassFunction f = PairClassFunction::indicator(g, (int)o);
            CHECK(pair_conv_second(unit2, f) == f);
            CHECK(pair_conv_second(f, unit2) == f);
            CHECK(pair_pontryagin(unitp, f) == f);
            CHECK(pair_pontryagin(f, unitp) == f);
        }
    }
}

TEST_CASE("bilinearity, commutativity, associativity on basis") {
    for (auto g : {build_symmetric(3), build_quaternion8(), build_cyclic(6)}) {
        const PairSpace& ps = pair_space_of(g);
        long n = (long)ps.orbits.size();
        std::vector<PairClassFunction> basis;
        for (long o = 0; o < n; ++o)
            basis.push_back(PairClassFunction::indicator(g, (int)o));
        using Prod = PairClassFunction (*)(const PairClassFunction&,
                                           const PairClassFunction&);
        for (Prod prod : {(Prod)pointwise, pair_conv_second, pair_pontryagin}) {
            for (long i = 0; i < n; ++i)
                for (long j = 0; j < n; ++j) {
                    CHECK(prod(basis[i], basis[j]) == prod(basis[j], basis[i]));
                    for (long k = 0; k < n; ++k)
                        CHECK(prod(prod(basis[i], basis[j]), basis[k]) ==
                              prod(basis[i], prod(basis[j], basis[k])));
                }
        }
    }
}

TEST_CASE("group mismatch rejected") {
    auto a = build_cyclic(2), b = build_cyclic(2);
    ClassFunction fa = ClassFunction::delta_identity(a);
    ClassFunction fb = ClassFunction::delta_identity(b);
    CHECK_THROWS_AS(convolution(fa, fb), std::invalid_argument);
    CHECK_THROWS_AS(pointwise(fa, fb), std::invalid_argument);
}

TEST_CASE("product tables") {
    auto z2 = build_cyclic(2);
    ProductTable conv = class_product_table(z2, convolution);
    // 1_e * 1_e = 1_e... actually delta_e * delta_e = delta at class of e
    CHECK(conv[0][0] == std::vector<Cyclotomic>({Cyclotomic(1), Cyclotomic(0)}));
    CHECK(conv[1][1] == std::vector<Cyclotomic>({Cyclotomic(1), Cyclotomic(0)}));
    CHECK(conv[0][1] == std::vector<Cyclotomic>({Cyclotomic(0), Cyclotomic(1)}));

    ProductTable pw = pair_product_table(z2, [](const PairClassFunction& x,
                                                const PairClassFunction& y) {
        return pointwise(x, y);
    });
    CHECK(pw.size() == 4);
}
