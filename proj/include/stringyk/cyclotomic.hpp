#pragma once

#include <vector>
#include <string>

#include "stringyk/rational.hpp"

namespace stringyk {

/**
 * Exact element of a cyclotomic field Q(zeta_n).
 *
 * Representation: coefficients over the power basis {zeta_n^k : 0 <= k < phi(n)},
 * reduced modulo the n-th cyclotomic polynomial. Every constructor and operation
 * normalizes to the minimal conductor, so equality is a plain coefficient
 * comparison and representations are canonical.
 */
class Cyclotomic {
public:
    Cyclotomic() : n_(1), c_(1, Rational(0)) {}
    Cyclotomic(const Rational& r) : n_(1), c_(1, r) {}
    Cyclotomic(long v) : n_(1), c_(1, Rational(v)) {}
    Cyclotomic(int v) : n_(1), c_(1, Rational(v)) {}

    // zeta_n^k
    static Cyclotomic root_of_unity(long n, long k);

    // Raw constructor from power-basis coefficients in Q(zeta_n); normalizes.
    static Cyclotomic from_coeffs(long n, std::vector<Rational> coeffs);

    long conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const { return n_ == 1; }
    // Valid only when is_rational().
    const Rational& rational_value() const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator/(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o) { *this = *this + o; return *this; }
    Cyclotomic& operator-=(const Cyclotomic& o) { *this = *this - o; return *this; }
    Cyclotomic& operator*=(const Cyclotomic& o) { *this = *this * o; return *this; }

    bool operator==(const Cyclotomic& o) const { return n_ == o.n_ && c_ == o.c_; }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    Cyclotomic conj() const;           // zeta |-> zeta^{-1}
    Cyclotomic galois(long k) const;   // zeta |-> zeta^k, gcd(k, conductor) = 1
    Cyclotomic inverse() const;
    Cyclotomic pow(long e) const;

    bool is_root_of_unity() const;
    // Unique theta in [0,1) with *this = e^{2 pi i theta}; throws for non-roots.
    Rational angle() const;

    // Deterministic total order (conductor, then coefficients); used for
    // canonical sorting only, no arithmetic meaning.
    static int compare(const Cyclotomic& a, const Cyclotomic& b);

    std::string to_string() const;

private:
    long n_;
    std::vector<Rational> c_; // size phi(n_)

    void normalize();
};

long gcd_long(long a, long b);
long lcm_long(long a, long b);
long euler_phi(long n);

} // namespace stringyk
