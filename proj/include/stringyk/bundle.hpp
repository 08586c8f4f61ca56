#pragma once

#include "stringyk/character_table.hpp"

namespace stringyk {

// Shared caches keyed by G-set identity, so repeated lookups agree pointerwise.
struct OrbitData {
    std::vector<std::vector<int>> orbits;
    std::vector<int> orbit_of;
};
const OrbitData& orbit_data_of(const GSetPtr& s);
const GSetPtr& inertia_of(const GSetPtr& s);

/**
 * Equivariant map of finite G-sets over the same group.
 */
struct EquivariantMap {
    GSetPtr source, target;
    std::vector<int> to;

    int operator()(int s) const { return to[s]; }
    void validate() const; // throws std::invalid_argument when not equivariant
};

EquivariantMap identity_map(const GSetPtr& s);
// Evaluation e: Lambda -> S, (s, g) -> s.
EquivariantMap evaluation_map(const GSetPtr& lambda);

/**
 * G-equivariant vector bundle over a finite G-set, with exact cyclotomic
 * transition matrices. Bundles over an inertia set may carry an automorphism
 * Phi (one endomorphism per point commuting with the structure maps); products
 * transport it so that ch_Phi of a pushforward is computed blockwise.
 */
struct EquivariantBundle {
    GSetPtr base;
    std::vector<long> fibers;                 // complex dimension per point
    std::vector<std::vector<CycMatrix>> maps; // maps[g][s]: fiber(s) -> fiber(g.s)
    std::vector<CycMatrix> phi;               // optional, per point

    bool has_phi() const { return !phi.empty(); }
    const CycMatrix& at(int g, int s) const { return maps[g][s]; }
    long rank_at(int s) const { return fibers[s]; }

    // Cocycle (checked on a generating set, complete by induction), identity,
    // and Phi compatibility; throws std::invalid_argument on failure.
    void validate() const;
};

EquivariantBundle trivial_bundle(GSetPtr base, long rank);
EquivariantBundle make_bundle(GSetPtr base, std::vector<long> fibers,
                              std::vector<std::vector<CycMatrix>> maps);

/**
 * Invariant function on an inertia set, stored per orbit: the coordinate
 * system for K-classes.
 */
struct DelocalizedCharacter {
    GSetPtr lambda;
    std::vector<Cyclotomic> values; // per orbit of lambda

    static DelocalizedCharacter zero(GSetPtr lambda);
    const Cyclotomic& at_orbit(int o) const { return values[o]; }
    // value at the inertia point (s, g)
    const Cyclotomic& at(int s, int g) const;

    DelocalizedCharacter operator+(const DelocalizedCharacter& o) const;
    DelocalizedCharacter operator-(const DelocalizedCharacter& o) const;
    DelocalizedCharacter scale(const Cyclotomic& c) const;
    bool operator==(const DelocalizedCharacter& o) const;
};

// chi(s, g) = trace of map(g, s) on fiber(s); lives on inertia_of(e.base).
DelocalizedCharacter deloc_character(const EquivariantBundle& e);

// Fiber at s = fiber at f(s), maps transported; Phi transported pointwise.
EquivariantBundle pullback(const EquivariantMap& f, const EquivariantBundle& e);
// Fiber at t = direct sum over f^{-1}(t) (ascending); Phi block diagonal.
EquivariantBundle pushforward(const EquivariantMap& f, const EquivariantBundle& e);
// Fiberwise Kronecker product over a common base; Phi = kron of the factors'.
EquivariantBundle tensor_bundle(const EquivariantBundle& a,
                                const EquivariantBundle& b);

// Phi at (s, g) = map(g, (s, g)); requires an inertia base.
std::vector<CycMatrix> canonical_automorphism(const EquivariantBundle& e);
EquivariantBundle attach_canonical_automorphism(EquivariantBundle e);

// Trace of the carried (or canonical) automorphism, per orbit of the base.
DelocalizedCharacter ch_phi(const EquivariantBundle& e);

/**
 * The 2-sector set Lambda^[2] = {(s, g1, g2) : g1, g2 in Stab(s)} of a base
 * G-set, with its three maps to Lambda.
 */
struct TwoSectorData {
    GSetPtr lambda2;
    std::vector<int> base_of;   // point -> s
    std::vector<int> first_of;  // point -> g1
    std::vector<int> second_of; // point -> g2
    EquivariantMap e1, e2, e12;
};

// Cached per inertia set.
const TwoSectorData& two_sector_of(const GSetPtr& lambda);

} // namespace stringyk
