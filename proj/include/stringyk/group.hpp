#pragma once

#include <memory>
#include <string>
#include <vector>

#include "stringyk/cyclotomic.hpp"

namespace stringyk {

// Raised when a mathematical invariant that should hold by theorem fails;
// the CLI maps it to exit code 2 (as opposed to invalid input, exit 1).
struct InvariantViolation : std::runtime_error {
    explicit InvariantViolation(const std::string& msg) : std::runtime_error(msg) {}
};

constexpr long kDefaultOrderCap = 64;

/**
 * Finite group with fully materialized multiplication and inverse tables.
 * Elements are dense indices 0..order-1.
 */
struct FiniteGroup {
    long order = 0;
    std::vector<std::vector<int>> mul;
    std::vector<int> inv;
    int identity = 0;
    std::vector<std::string> names;

    int op(int a, int b) const { return mul[a][b]; }
    int conj(int k, int g) const { return mul[mul[k][g]][inv[k]]; } // k g k^{-1}
    long element_order(int g) const;
    long exponent() const;

    // Checks associativity, identity, and inverses by full enumeration;
    // throws std::invalid_argument naming the failing triple.
    void validate() const;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr build_cyclic(long n);
GroupPtr build_symmetric(long n, long order_cap = kDefaultOrderCap);
GroupPtr build_dihedral(long n, long order_cap = kDefaultOrderCap); // order 2n
GroupPtr build_quaternion8();
// Closure of permutation generators (images of 0..deg-1).
GroupPtr build_from_permutations(const std::vector<std::vector<int>>& gens,
                                 long order_cap = kDefaultOrderCap);
GroupPtr build_from_table(std::vector<std::vector<int>> mul,
                          std::vector<std::string> names = {});

// A small generating set (greedy); used for cocycle checks.
std::vector<int> generating_set(const FiniteGroup& g);

struct ConjugacyData {
    std::vector<std::vector<int>> classes; // sorted by (size, min element)
    std::vector<int> class_of;
    std::vector<std::vector<int>> centralizers; // per element, sorted lists
};

ConjugacyData conjugacy(const FiniteGroup& g);

/**
 * Finite G-set with a fully materialized action table. May carry inertia
 * structure: when `labels` is nonempty, point i is a pair
 * (base_point[i], labels[i]) of an inertia set over `source`.
 */
struct FiniteGSet {
    GroupPtr group;
    long size = 0;
    std::vector<std::vector<int>> act; // [g][s]

    // inertia structure (empty for plain G-sets)
    std::shared_ptr<const FiniteGSet> source;
    std::vector<int> base_point;
    std::vector<int> labels;
    std::vector<int> pair_index; // s*|G|+g -> point index, -1 if absent

    int apply(int g, int s) const { return act[g][s]; }
    bool is_inertia() const { return !labels.empty(); }
    int inertia_index(int s, int g) const { return pair_index[s * group->order + g]; }

    void validate() const;
    std::vector<std::vector<int>> orbits() const; // sorted by min point
    std::vector<int> orbit_of_table() const;      // point -> orbit index
    std::vector<int> stabilizer(int s) const;
};

using GSetPtr = std::shared_ptr<const FiniteGSet>;

// The one-point G-set.
GSetPtr point_set(GroupPtr g);
// G acting on itself by conjugation.
GSetPtr conjugation_set(GroupPtr g);
// G acting on itself by left translation.
GSetPtr left_translation_set(GroupPtr g);

// Lambda = {(s,g) : g.s = s} with k.(s,g) = (k.s, kgk^{-1}); carries the
// evaluation map to S via base_point.
GSetPtr inertia_set(GSetPtr s);

// G-tilde = {(g,h) : gh = hg} with simultaneous conjugation; realized as the
// inertia set of the conjugation action.
GSetPtr commuting_pairs(GroupPtr g);

/**
 * Subgroup of a parent group re-indexed as a standalone FiniteGroup.
 */
struct Subgroup {
    GroupPtr group;              // the subgroup as its own group
    GroupPtr parent;
    std::vector<int> elems;      // subgroup index -> parent index, sorted
    std::vector<int> from_parent; // parent index -> subgroup index or -1
};

Subgroup make_subgroup(GroupPtr parent, std::vector<int> elements);
Subgroup centralizer_subgroup(GroupPtr g, int x);
Subgroup generated_subgroup(GroupPtr g, const std::vector<int>& gens);
std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b);

} // namespace stringyk
