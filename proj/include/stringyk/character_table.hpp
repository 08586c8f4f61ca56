#pragma once

#include "stringyk/class_function.hpp"
#include "stringyk/matrix.hpp"

namespace stringyk {

/**
 * Complete table of irreducible characters, rows sorted by
 * (degree, lexicographic values). Both orthogonality relations are verified
 * at construction time.
 */
struct CharacterTable {
    GroupPtr group;
    std::vector<ClassFunction> irreducibles;
    std::vector<long> degrees;

    long num_classes() const { return (long)irreducibles.size(); }
};

using TablePtr = std::shared_ptr<const CharacterTable>;

// Dixon's modular method; result cached per group.
TablePtr character_table(const GroupPtr& g);

/**
 * Element of R(G) tensor the cyclotomic field: multiplicities over the
 * irreducible basis. Rational multiplicities house fractional eigen-bundle
 * combinations; arbitrary cyclotomic multiplicities arise when decomposing
 * general invariant functions.
 */
struct VirtualCharacter {
    TablePtr table;
    std::vector<Cyclotomic> mult;

    bool is_integral() const;  // all multiplicities integers
    bool is_genuine() const;   // nonnegative integers
    bool is_rational() const;
    Cyclotomic rank() const;   // value at the identity
    ClassFunction to_class_function() const;

    VirtualCharacter operator+(const VirtualCharacter& o) const;
    VirtualCharacter operator-(const VirtualCharacter& o) const;
    VirtualCharacter scale(const Cyclotomic& s) const;
};

VirtualCharacter decompose(const ClassFunction& f, TablePtr t);

// Left-translation permutation matrix of g in the regular representation.
CycMatrix regular_rep_matrix(const FiniteGroup& g, int x);

// p_i = (deg_i/|G|) sum_g conj(chi_i(g)) rho_reg(g); idempotents summing to I.
std::vector<CycMatrix> isotypic_projectors(const TablePtr& t);

} // namespace stringyk
