#pragma once

#include "stringyk/character_table.hpp"

namespace stringyk {

// Cached centralizer subgroups, shared so character tables built over them are
// identical objects across call sites.
const Subgroup& centralizer_of(const GroupPtr& g, int x);
// Z_G(g1) intersect Z_G(g2), cached per (group, g1, g2).
const Subgroup& pair_centralizer_of(const GroupPtr& g, int g1, int g2);

/**
 * Finite group acting unitarily on a finite-dimensional complex vector space,
 * with exact cyclotomic matrices. Linear orbifold chart [V/G].
 */
struct UnitaryModel {
    GroupPtr group;
    long dim = 0;
    std::vector<CycMatrix> rho; // per element

    const CycMatrix& at(int g) const { return rho[g]; }
    // Checks the homomorphism property on the full table and unitarity of
    // every matrix; throws std::invalid_argument on failure.
    void validate() const;
};

// Validates before returning.
UnitaryModel make_model(GroupPtr group, std::vector<CycMatrix> matrices);

// Z_n acting diagonally with the given weights: a -> diag(zeta_n^{a w_t}).
UnitaryModel cyclic_weights_model(long n, const std::vector<long>& weights);
// Standard (n-1)-dimensional representation of S_n in an orthonormal basis.
UnitaryModel symmetric_standard_model(long n);
// r -> diag(zeta_n, zeta_n^{-1}), s -> coordinate swap.
UnitaryModel dihedral_standard_model(long n);
// The 2-dimensional irreducible representation of Q8.
UnitaryModel quaternion_standard_model();
// Left-regular representation of any group.
UnitaryModel regular_model(const GroupPtr& g);
// Permutation matrices from per-element permutations (perms[a][v] = a.v).
UnitaryModel permutation_model(const GroupPtr& g,
                               const std::vector<std::vector<int>>& perms);
UnitaryModel symmetric_perm_model(long n);
UnitaryModel dihedral_perm_model(long n);

// P_{theta = k/m} = (1/m) sum_j zeta_m^{-kj} rho_g^j; requires rho_g^m = I.
CycMatrix eigen_projector(const CycMatrix& rho_g, long m, long k);

/**
 * Twisted-sector data of one group element: eigen-angles on V and the degree
 * shifting number (age).
 */
struct SectorDatum {
    int g = 0;           // class representative
    long fixed_dim = 0;  // dim V^g
    std::vector<std::pair<Rational, long>> angles; // (theta != 0, multiplicity)
    Rational age;        // sum theta * multiplicity
};

SectorDatum sector_data(const UnitaryModel& m, int g);

enum class Direction { Phi, PhiInverse };

/**
 * Fractional normal class of the untwisted sector at g: the rational
 * combination sum_theta c(theta) * [V_theta(g)] as a virtual character of
 * Z_G(g), with c = theta for Phi and 1 - theta for Phi inverse.
 */
struct FractionalNormal {
    const Subgroup* centralizer; // points into the shared cache
    VirtualCharacter chi;        // over centralizer->group
};

FractionalNormal fractional_normal(const UnitaryModel& m, int g, Direction dir);

struct JointComponent {
    Rational theta1, theta2, theta12;
    long dim = 0;
    ClassFunction chi; // character of Z_G(g1) cap Z_G(g2) on the component
};

/**
 * Obstruction bundle character of a 2-sector (g1, g2) as a virtual character
 * of K = Z_G(g1) cap Z_G(g2). Joint eigencomponents are available only when
 * g1 and g2 commute; the total is always defined.
 */
struct ObstructionDatum {
    int g1 = 0, g2 = 0;
    const Subgroup* k = nullptr;
    std::vector<JointComponent> components; // empty unless g1 g2 = g2 g1
    VirtualCharacter total;
};

ObstructionDatum obstruction_character(const UnitaryModel& m, int g1, int g2);

struct SectorReport {
    std::vector<SectorDatum> sectors;     // one per conjugacy class
    std::vector<ObstructionDatum> pairs;  // one per commuting-pair orbit
};

SectorReport sector_report(const UnitaryModel& m);

// Exact square root of a positive integer, realized in a cyclotomic field.
Cyclotomic cyclotomic_sqrt(long m);

} // namespace stringyk
