#pragma once

#include <optional>

#include "stringyk/bundle.hpp"
#include "stringyk/class_function.hpp"

namespace stringyk {

/**
 * K-class of a finite global quotient [S/G] in delocalized-character
 * coordinates, with an optional explicit bundle witness over S.
 */
struct KClass {
    DelocalizedCharacter ch;                  // on inertia_of(S)
    std::optional<EquivariantBundle> witness; // over S; deloc_character == ch

    void check_witness() const; // throws InvariantViolation on mismatch
};

/**
 * Basis of K(S/G) tensor the cyclotomics by explicit bundles: for each orbit
 * of S and each irreducible of its stabilizer, the induced bundle built from
 * the isotypic block of the stabilizer's regular representation (character
 * deg_i * induced chi_i).
 */
struct KBasisElement {
    int orbit = 0; // orbit index in S
    int irrep = 0; // row index in the stabilizer's character table
    EquivariantBundle bundle;
    DelocalizedCharacter ch;
};

struct KBasis {
    GSetPtr s, lambda;
    std::vector<KBasisElement> elems;
    CycMatrix char_matrix; // lambda-orbit x basis-element, invertible

    // Solves for the coordinates of a character in this basis.
    std::vector<Cyclotomic> coordinates(const DelocalizedCharacter& c) const;
};

KBasis k_basis(const GSetPtr& s);

// Pullback along the evaluation map Lambda -> S, with the canonical
// automorphism attached.
EquivariantBundle e_star(const EquivariantBundle& witness);

// ch_deloc^{-1} of ch_phi: in delocalized coordinates the identity on values.
KClass e_sharp(const EquivariantBundle& over_lambda);

// (e12)_* (e1^* a tensor e2^* b); both inputs over the same inertia set and
// carrying automorphisms. The result carries the blockwise automorphism. The
// result is not re-validated (tests validate small instances).
EquivariantBundle stringy_bundle_product(const EquivariantBundle& a,
                              const EquivariantBundle& b);

// ch_phi of the stringy product of bundle representatives computed at orbit representatives only, by
// materializing and tracing the Kronecker blocks of the pushforward fiber.
DelocalizedCharacter stringy_bundle_character(const EquivariantBundle& a,
                                           const EquivariantBundle& b);

// Closed formula for the stringy product in delocalized coordinates:
// (a o b)(s, g) = sum over g1 g2 = g in Stab(s) of a(s, g1) b(s, g2).
DelocalizedCharacter closed_stringy_product(const DelocalizedCharacter& a,
                                            const DelocalizedCharacter& b);

// Tensor product in delocalized coordinates (pointwise multiplication).
DelocalizedCharacter tensor_character(const DelocalizedCharacter& a,
                                      const DelocalizedCharacter& b);

// Explicit-bundle stringy product of two basis elements:
// e_sharp(bundle_product(e_star(b_i), e_star(b_j))). `dense` runs the full bundle
// pipeline; otherwise the orbit-representative trace route is used.
DelocalizedCharacter stringy_product_explicit(const KBasis& kb, int i, int j,
                                              bool dense);

// Bridges to class-function land for the closed-formula oracles.
ClassFunction ptg_to_class_function(const GroupPtr& g,
                                    const DelocalizedCharacter& c);
DelocalizedCharacter ptg_from_class_function(const GSetPtr& pt,
                                             const ClassFunction& f);
PairClassFunction gg_to_pair_function(const GroupPtr& g,
                                      const DelocalizedCharacter& c);
DelocalizedCharacter gg_from_pair_function(const GSetPtr& conj,
                                           const PairClassFunction& f);

} // namespace stringyk
