#pragma once

#include <functional>

#include "stringyk/group.hpp"
#include "stringyk/matrix.hpp"

namespace stringyk {

// Per-group caches (keyed by group identity; groups are immutable).
const ConjugacyData& conjugacy_of(const GroupPtr& g);

// Conjugation orbits of commuting pairs, shared by all PairClassFunctions.
struct PairSpace {
    GSetPtr pairs; // inertia of the conjugation action: points (g, h)
    std::vector<std::vector<int>> orbits;
    std::vector<int> orbit_of; // point -> orbit
    int orbit_index(int g, int h) const; // -1 when gh != hg
};

const PairSpace& pair_space_of(const GroupPtr& g);

/**
 * Cyclotomic-valued class function, stored per conjugacy class.
 */
class ClassFunction {
public:
    ClassFunction(GroupPtr group, std::vector<Cyclotomic> per_class);

    static ClassFunction zero(GroupPtr group);
    static ClassFunction indicator(GroupPtr group, int class_index);
    static ClassFunction delta_identity(GroupPtr group);
    static ClassFunction from_elements(GroupPtr group,
                                       const std::function<Cyclotomic(int)>& f);

    const GroupPtr& group() const { return group_; }
    long num_classes() const { return (long)v_.size(); }
    const Cyclotomic& at_class(int c) const { return v_[c]; }
    const Cyclotomic& at_element(int g) const;
    const std::vector<Cyclotomic>& values() const { return v_; }

    ClassFunction operator+(const ClassFunction& o) const;
    ClassFunction operator-(const ClassFunction& o) const;
    ClassFunction scale(const Cyclotomic& s) const;
    ClassFunction conj() const;
    bool operator==(const ClassFunction& o) const;

private:
    GroupPtr group_;
    std::vector<Cyclotomic> v_;
    void check_same(const ClassFunction& o) const;
};

ClassFunction pointwise(const ClassFunction& a, const ClassFunction& b);
ClassFunction convolution(const ClassFunction& a, const ClassFunction& b);

/**
 * G-invariant function on commuting pairs, stored per conjugation orbit.
 */
class PairClassFunction {
public:
    PairClassFunction(GroupPtr group, std::vector<Cyclotomic> per_orbit);

    static PairClassFunction zero(GroupPtr group);
    static PairClassFunction indicator(GroupPtr group, int orbit_index);
    static PairClassFunction constant(GroupPtr group, const Cyclotomic& c);
    static PairClassFunction from_pairs(
        GroupPtr group, const std::function<Cyclotomic(int, int)>& f);

    const GroupPtr& group() const { return group_; }
    long num_orbits() const { return (long)v_.size(); }
    const Cyclotomic& at_orbit(int o) const { return v_[o]; }
    // value at a commuting pair (g, h)
    const Cyclotomic& at(int g, int h) const;
    const std::vector<Cyclotomic>& values() const { return v_; }

    PairClassFunction operator+(const PairClassFunction& o) const;
    PairClassFunction scale(const Cyclotomic& s) const;
    bool operator==(const PairClassFunction& o) const;

private:
    GroupPtr group_;
    std::vector<Cyclotomic> v_;
    void check_same(const PairClassFunction& o) const;
};

PairClassFunction pointwise(const PairClassFunction& a, const PairClassFunction& b);
// (f1 *_2 f2)(g,h) = sum_{h1 h2 = h, h_i in Z(g)} f1(g,h1) f2(g,h2)
PairClassFunction pair_conv_second(const PairClassFunction& a,
                                   const PairClassFunction& b);
// (f1 . f2)(g,h) = sum_{g1 g2 = g, h in Z(g1) cap Z(g2)} f1(g1,h) f2(g2,h)
PairClassFunction pair_pontryagin(const PairClassFunction& a,
                                  const PairClassFunction& b);

// Structure constants of a bilinear product in the orbit-indicator basis:
// entry (i,j) is the coefficient vector of product(1_i, 1_j).
using ProductTable = std::vector<std::vector<std::vector<Cyclotomic>>>;

ProductTable class_product_table(
    const GroupPtr& g,
    const std::function<ClassFunction(const ClassFunction&, const ClassFunction&)>& prod);
ProductTable pair_product_table(
    const GroupPtr& g,
    const std::function<PairClassFunction(const PairClassFunction&,
                                          const PairClassFunction&)>& prod);

} // namespace stringyk
