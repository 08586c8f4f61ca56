#pragma once

#include "stringyk/matrix.hpp"
#include "stringyk/rational.hpp"

namespace stringyk {

/**
 * The weighted projective line WP(p, q), gcd(p, q) = 1: two cyclic orbifold
 * points x (isotropy Z_p, local weight q) and y (isotropy Z_q, local weight
 * p), plus the untwisted sector.
 */
struct OrbisphereModel {
    long p = 1, q = 1;
    std::vector<Rational> age_x; // age of sector k = 1..p-1: frac(k q / p)
    std::vector<Rational> age_y; // age of sector l = 1..q-1: frac(l p / q)
};

OrbisphereModel build_orbisphere(long p, long q);

/**
 * Finite-dimensional graded ring on the canonical basis
 *   0 -> 1,  1 -> t (point class),  2..p -> alpha_1..alpha_{p-1},
 *   p+1..p+q-1 -> beta_1..beta_{q-1},
 * given by its structure constants.
 */
struct OrbisphereRing {
    OrbisphereModel model;
    long dim = 0;
    // table[i][j] = coefficient vector of basis_i * basis_j
    std::vector<std::vector<std::vector<Cyclotomic>>> table;

    long alpha_index(long k) const { return 1 + k; }           // k = 1..p-1
    long beta_index(long l) const { return model.p + l; }      // l = 1..q-1
    std::vector<Cyclotomic> multiply(const std::vector<Cyclotomic>& a,
                                     const std::vector<Cyclotomic>& b) const;
    std::vector<Cyclotomic> basis_vector(long i) const;
};

// Chen-Ruan ring: sector-closing products alpha_k alpha_{p-k} = (1/p) t and
// beta_l beta_{q-l} = (1/q) t, fixed by the orbifold pairing.
OrbisphereRing cr_ring(const OrbisphereModel& m);

// Orbifold Poincare pairing on the same basis: <1, t> = 1,
// <alpha_k, alpha_{p-k}> = 1/p, <beta_l, beta_{q-l}> = 1/q.
CycMatrix cr_pairing(const OrbisphereModel& m);

// Stringy K-ring convention: identical grading rules with closing constant 1
// (related to the CR table by the sector rescale alpha_k -> p^{k0 age} etc.,
// an isomorphism over the complex numbers).
OrbisphereRing stringy_k_table(const OrbisphereModel& m);

/**
 * K-ring presentation with the generators alpha_p (the age-1/p sector at x),
 * beta_q (the age-1/q sector at y) and u = 1 - t.
 */
struct KRingReport {
    OrbisphereRing ring;
    long alpha_gen = 0; // sector index k0 with age 1/p (0 when p = 1)
    long beta_gen = 0;  // sector index l0 with age 1/q (0 when q = 1)
    bool alpha_relation = false; // alpha^p = 1 - u and alpha^{p+1} = 0
    bool beta_relation = false;  // beta^q = 1 - u and beta^{q+1} = 0
    bool u_relation = false;     // (1 - u)^2 = 0
    // the closing constant is pinned at (2,3) and carried unchanged; a global
    // rescale of t remains a free convention, flagged rather than hidden
    bool normalization_freedom_flagged = true;
};

// Verifies the relations; throws InvariantViolation when any fails.
KRingReport stringy_k_ring(const OrbisphereModel& m);

// Exhaustive commutativity/associativity over basis triples.
void check_ring_axioms(const OrbisphereRing& r);

} // namespace stringyk
