#include "stringyk/orbisphere.hpp"

#include "stringyk/group.hpp"

namespace stringyk {

OrbisphereModel build_orbisphere(long p, long q) {
    if (p < 1 || q < 1 || gcd_long(p, q) != 1)
        throw std::invalid_argument("orbisphere: weights must be coprime positive");
    OrbisphereModel m;
    m.p = p;
    m.q = q;
    for (long k = 1; k < p; ++k) m.age_x.push_back(frac_mod1(Rational(k * q, p)));
    for (long l = 1; l < q; ++l) m.age_y.push_back(frac_mod1(Rational(l * p, q)));
    return m;
}

std::vector<Cyclotomic> OrbisphereRing::basis_vector(long i) const {
    std::vector<Cyclotomic> v(dim);
    v[i] = Cyclotomic(1);
    return v;
}

std::vector<Cyclotomic> OrbisphereRing::multiply(
    const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) const {
    std::vector<Cyclotomic> r(dim);
    for (long i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (long j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            Cyclotomic c = a[i] * b[j];
            for (long t = 0; t < dim; ++t)
                if (!table[i][j][t].is_zero()) r[t] += c * table[i][j][t];
        }
    }
    return r;
}

namespace {

// Shared grading rules; only the sector-closing constants differ between the
// Chen-Ruan and K-theory conventions.
OrbisphereRing make_ring(const OrbisphereModel& m, const Rational& close_x,
                         const Rational& close_y) {
    OrbisphereRing r;
    r.model = m;
    r.dim = m.p + m.q;
    auto age = [&](bool at_x, long k) {
        return at_x ? m.age_x[k - 1] : m.age_y[k - 1];
    };
    auto twisted = [&](bool at_x, long k1, long k2) {
        long n = at_x ? m.p : m.q;
        std::vector<Cyclotomic> v(r.dim);
        long s = (k1 + k2) % n;
        if (s == 0) {
            v[1] = Cyclotomic(at_x ? close_x : close_y); // closes onto t
        } else if (age(at_x, k1) + age(at_x, k2) == age(at_x, s)) {
            v[at_x ? r.alpha_index(s) : r.beta_index(s)] = Cyclotomic(1);
        } // wrapped without closing: rank-1 obstruction over a point, product 0
        return v;
    };
    r.table.assign(r.dim, std::vector<std::vector<Cyclotomic>>(r.dim));
    for (long i = 0; i < r.dim; ++i)
        for (long j = 0; j < r.dim; ++j) {
            std::vector<Cyclotomic> v(r.dim);
            if (i == 0) v[j] = Cyclotomic(1);
            else if (j == 0) v[i] = Cyclotomic(1);
            else if (i == 1 || j == 1) {
                // t t = 0 and t annihilates every twisted sector
            } else if (i <= m.p - 1 + 1 && j <= m.p - 1 + 1) {
                v = twisted(true, i - 1, j - 1);
            } else if (i > m.p && j > m.p) {
                v = twisted(false, i - m.p, j - m.p);
            } // alpha beta cross products vanish: disjoint fixed points
            r.table[i][j] = std::move(v);
        }
    return r;
}

long inverse_mod(long a, long n) {
    a %= n;
    for (long x = 1; x < n; ++x)
        if (a * x % n == 1) return x;
    throw std::invalid_argument("not invertible");
}

} // namespace

OrbisphereRing cr_ring(const OrbisphereModel& m) {
    return make_ring(m, Rational(1, m.p), Rational(1, m.q));
}

CycMatrix cr_pairing(const OrbisphereModel& m) {
    long dim = m.p + m.q;
    CycMatrix g(dim, dim);
    g.at(0, 1) = g.at(1, 0) = Cyclotomic(1);
    for (long k = 1; k < m.p; ++k)
        g.at(1 + k, 1 + (m.p - k)) = Cyclotomic(Rational(1, m.p));
    for (long l = 1; l < m.q; ++l)
        g.at(m.p + l, m.p + (m.q - l)) = Cyclotomic(Rational(1, m.q));
    return g;
}

OrbisphereRing stringy_k_table(const OrbisphereModel& m) {
    return make_ring(m, Rational(1), Rational(1));
}

void check_ring_axioms(const OrbisphereRing& r) {
    for (long i = 0; i < r.dim; ++i)
        for (long j = 0; j < r.dim; ++j) {
            if (r.table[i][j] != r.table[j][i])
                throw InvariantViolation("orbisphere ring is not commutative");
            for (long k = 0; k < r.dim; ++k) {
                auto left = r.multiply(r.table[i][j], r.basis_vector(k));
                auto right = r.multiply(r.basis_vector(i), r.table[j][k]);
                if (left != right)
                    throw InvariantViolation("orbisphere ring is not associative");
            }
        }
}

KRingReport stringy_k_ring(const OrbisphereModel& m) {
    KRingReport rep;
    rep.ring = stringy_k_table(m);
    check_ring_axioms(rep.ring);
    const OrbisphereRing& r = rep.ring;
    std::vector<Cyclotomic> t = r.basis_vector(1);
    std::vector<Cyclotomic> zero(r.dim);

    auto power = [&](const std::vector<Cyclotomic>& v, long e) {
        std::vector<Cyclotomic> acc = r.basis_vector(0);
        for (long i = 0; i < e; ++i) acc = r.multiply(acc, v);
        return acc;
    };

    if (m.p > 1) {
        rep.alpha_gen = inverse_mod(m.q, m.p); // the sector of age 1/p
        std::vector<Cyclotomic> a = r.basis_vector(r.alpha_index(rep.alpha_gen));
        rep.alpha_relation = power(a, m.p) == t && power(a, m.p + 1) == zero;
    } else {
        rep.alpha_relation = true;
    }
    if (m.q > 1) {
        rep.beta_gen = inverse_mod(m.p, m.q);
        std::vector<Cyclotomic> b = r.basis_vector(r.beta_index(rep.beta_gen));
        rep.beta_relation = power(b, m.q) == t && power(b, m.q + 1) == zero;
    } else {
        rep.beta_relation = true;
    }
    rep.u_relation = r.multiply(t, t) == zero; // (1-u)^2 with 1-u = t
    if (!rep.alpha_relation || !rep.beta_relation || !rep.u_relation)
        throw InvariantViolation("orbisphere K-ring relations fail");
    return rep;
}

} // namespace stringyk
