#include "stringyk/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace stringyk {

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid rational: '" + s + "'");
    }
}

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Dense integer polynomials, index = degree.
using IPoly = std::vector<long long>;

// Exact division assuming divisibility (both inputs with integer coefficients).
IPoly ipoly_div(const IPoly& a, const IPoly& b) {
    IPoly r = a;
    IPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    long db = (long)b.size() - 1;
    for (long i = (long)r.size() - 1; i >= db; --i) {
        if (r[i] == 0) continue;
        long long c = r[i] / b[db];
        q[i - db] = c;
        for (long j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
    }
    while (q.size() > 1 && q.back() == 0) q.pop_back();
    return q;
}

IPoly cyclotomic_poly(long n) {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    IPoly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        p = ipoly_div(p, cyclotomic_poly(d));
    }
    return p;
}

struct FieldData {
    long n;
    long phi;
    IPoly poly; // Phi_n, monic, degree phi
    // powers[j] = coefficients of zeta_n^j in the power basis, 0 <= j < n
    std::vector<std::vector<Rational>> powers;
};

const FieldData& field_data(long n) {
    static std::map<long, FieldData> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    FieldData fd;
    fd.n = n;
    fd.poly = cyclotomic_poly(n);
    fd.phi = (long)fd.poly.size() - 1;
    fd.powers.resize(n);
    std::vector<Rational> cur(fd.phi, Rational(0));
    cur[0] = 1;
    for (long j = 0; j < n; ++j) {
        fd.powers[j] = cur;
        // multiply by x modulo Phi_n
        Rational top = cur[fd.phi - 1];
        for (long i = fd.phi - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (long i = 0; i < fd.phi; ++i) cur[i] -= top * Rational(fd.poly[i]);
    }
    auto res = cache.emplace(n, std::move(fd));
    return res.first->second;
}

// Reduce a polynomial of arbitrary degree modulo Phi_n into the power basis.
std::vector<Rational> reduce_mod_phi(long n, const std::vector<Rational>& p) {
    const FieldData& fd = field_data(n);
    std::vector<Rational> r = p;
    if ((long)r.size() < fd.phi) r.resize(fd.phi, Rational(0));
    for (long i = (long)r.size() - 1; i >= fd.phi; --i) {
        if (r[i] == 0) continue;
        Rational c = r[i];
        r[i] = 0;
        for (long j = 0; j < fd.phi; ++j) r[i - fd.phi + j] -= c * Rational(fd.poly[j]);
    }
    r.resize(fd.phi);
    return r;
}

// Solve M x = v exactly (M given by columns); returns false if inconsistent.
bool solve_columns(std::vector<std::vector<Rational>> cols,
                   std::vector<Rational> v, std::vector<Rational>& out) {
    long rows = (long)v.size();
    long ncols = (long)cols.size();
    std::vector<long> pivot_col(rows, -1);
    long rank = 0;
    for (long c = 0; c < ncols && rank < rows; ++c) {
        long pr = -1;
        for (long r = rank; r < rows; ++r)
            if (cols[c][r] != 0) { pr = r; break; }
        if (pr < 0) continue;
        for (long cc = 0; cc < ncols; ++cc) std::swap(cols[cc][pr], cols[cc][rank]);
        std::swap(v[pr], v[rank]);
        Rational inv = cols[c][rank];
        for (long r = 0; r < rows; ++r) {
            if (r == rank || cols[c][r] == 0) continue;
            Rational f = cols[c][r] / inv;
            for (long cc = c; cc < ncols; ++cc)
                if (cols[cc][rank] != 0) cols[cc][r] -= f * cols[cc][rank];
            v[r] -= f * v[rank];
        }
        pivot_col[rank] = c;
        ++rank;
    }
    out.assign(ncols, Rational(0));
    for (long r = 0; r < rank; ++r) out[pivot_col[r]] = v[r] / cols[pivot_col[r]][r];
    // consistency: rows beyond rank must have v = 0
    for (long r = rank; r < rows; ++r)
        if (v[r] != 0) return false;
    // verify non-pivot columns don't break the solution (pivot structure
    // guarantees it only if the free columns got zero coefficients, which
    // they did)
    return true;
}

} // namespace

void Cyclotomic::normalize() {
    if (n_ == 1) return;
    // Fast path: all higher coefficients zero means a rational number.
    bool rat = true;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) { rat = false; break; }
    if (rat) {
        Rational v = c_[0];
        n_ = 1;
        c_.assign(1, v);
        return;
    }
    bool changed = true;
    while (changed && n_ > 1) {
        changed = false;
        long n = n_;
        std::vector<long> primes;
        long t = n;
        for (long p = 2; p * p <= t; ++p)
            if (t % p == 0) {
                primes.push_back(p);
                while (t % p == 0) t /= p;
            }
        if (t > 1) primes.push_back(t);
        for (long p : primes) {
            // try to descend to conductor m = n / p
            long m = n / p;
            const FieldData& fd = field_data(n);
            long phim = euler_phi(m);
            std::vector<std::vector<Rational>> cols(phim);
            for (long j = 0; j < phim; ++j) cols[j] = fd.powers[(n / m) * j % n];
            std::vector<Rational> sol;
            if (solve_columns(cols, c_, sol)) {
                // confirm: residual check by re-expansion
                std::vector<Rational> acc(fd.phi, Rational(0));
                for (long j = 0; j < phim; ++j)
                    if (sol[j] != 0)
                        for (long i = 0; i < fd.phi; ++i)
                            acc[i] += sol[j] * fd.powers[(n / m) * j % n][i];
                if (acc == c_) {
                    n_ = m;
                    c_ = std::move(sol);
                    if (m == 1) c_.resize(1);
                    changed = true;
                    break;
                }
            }
        }
    }
}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
    if (n < 1) throw std::invalid_argument("root_of_unity: n must be positive");
    k %= n;
    if (k < 0) k += n;
    Cyclotomic x;
    x.n_ = n;
    x.c_ = field_data(n).powers[k];
    x.normalize();
    return x;
}

Cyclotomic Cyclotomic::from_coeffs(long n, std::vector<Rational> coeffs) {
    if (n < 1) throw std::invalid_argument("from_coeffs: n must be positive");
    Cyclotomic x;
    x.n_ = n;
    x.c_ = reduce_mod_phi(n, coeffs);
    x.normalize();
    return x;
}

bool Cyclotomic::is_zero() const {
    return n_ == 1 && c_[0] == 0;
}

const Rational& Cyclotomic::rational_value() const {
    if (n_ != 1) throw std::logic_error("rational_value on irrational cyclotomic");
    return c_[0];
}

namespace {
std::vector<Rational> lift_coeffs(const Cyclotomic& x, long L) {
    const FieldData& fd = field_data(L);
    long n = x.conductor();
    std::vector<Rational> out(fd.phi, Rational(0));
    for (size_t i = 0; i < x.coeffs().size(); ++i) {
        if (x.coeffs()[i] == 0) continue;
        const auto& pw = fd.powers[(L / n) * (long)i % L];
        for (long j = 0; j < fd.phi; ++j) out[j] += x.coeffs()[i] * pw[j];
    }
    return out;
}
} // namespace

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    long L = lcm_long(n_, o.n_);
    std::vector<Rational> a = lift_coeffs(*this, L), b = lift_coeffs(o, L);
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    Cyclotomic r;
    r.n_ = L;
    r.c_ = std::move(a);
    r.normalize();
    return r;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (is_zero() || o.is_zero()) return Cyclotomic();
    if (n_ == 1) {
        Cyclotomic r = o;
        for (auto& v : r.c_) v *= c_[0];
        r.normalize();
        return r;
    }
    if (o.n_ == 1) return o * *this;
    long L = lcm_long(n_, o.n_);
    std::vector<Rational> a = lift_coeffs(*this, L), b = lift_coeffs(o, L);
    std::vector<Rational> prod(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) prod[i + j] += a[i] * b[j];
    }
    Cyclotomic r;
    r.n_ = L;
    r.c_ = reduce_mod_phi(L, prod);
    r.normalize();
    return r;
}

Cyclotomic Cyclotomic::galois(long k) const {
    if (n_ == 1) return *this;
    long kk = ((k % n_) + n_) % n_;
    if (gcd_long(kk, n_) != 1)
        throw std::invalid_argument("galois: exponent not coprime to conductor");
    const FieldData& fd = field_data(n_);
    std::vector<Rational> out(fd.phi, Rational(0));
    for (long i = 0; i < fd.phi; ++i) {
        if (c_[i] == 0) continue;
        const auto& pw = fd.powers[(i * kk) % n_];
        for (long j = 0; j < fd.phi; ++j) out[j] += c_[i] * pw[j];
    }
    Cyclotomic r;
    r.n_ = n_;
    r.c_ = std::move(out);
    r.normalize();
    return r;
}

Cyclotomic Cyclotomic::conj() const { return galois(n_ - 1); }

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::invalid_argument("division by zero cyclotomic");
    if (n_ == 1) return Cyclotomic(Rational(1) / c_[0]);
    // Extended Euclid for (this as polynomial, Phi_n) over Q.
    using QPoly = std::vector<Rational>;
    const FieldData& fd = field_data(n_);
    QPoly a = c_;
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    QPoly b(fd.poly.size());
    for (size_t i = 0; i < fd.poly.size(); ++i) b[i] = Rational(fd.poly[i]);
    QPoly u0{Rational(1)}, u1{Rational(0)}; // coefficients on `a`
    // invariants: a = u0 * orig_a mod Phi, b = u1 * orig_a mod Phi
    auto pmod = [](QPoly num, const QPoly& den, QPoly& quot) {
        quot.assign(num.size() > den.size() ? num.size() - den.size() + 1 : 1, Rational(0));
        long dd = (long)den.size() - 1;
        for (long i = (long)num.size() - 1; i >= dd; --i) {
            if (num[i] == 0) continue;
            Rational c = num[i] / den[dd];
            quot[i - dd] = c;
            for (long j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
        }
        while (num.size() > 1 && num.back() == 0) num.pop_back();
        return num;
    };
    auto psub_mul = [](const QPoly& x, const QPoly& q, const QPoly& y) {
        // x - q*y
        QPoly r = x;
        if (r.size() < q.size() + y.size()) r.resize(q.size() + y.size() - 1, Rational(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < y.size(); ++j) r[i + j] -= q[i] * y[j];
        }
        while (r.size() > 1 && r.back() == 0) r.pop_back();
        return r;
    };
    QPoly ra = a, rb = b;
    while (!(rb.size() == 1 && rb[0] == 0)) {
        QPoly q;
        QPoly rem = pmod(ra, rb, q);
        QPoly u2 = psub_mul(u0, q, u1);
        ra = rb; rb = rem;
        u0 = u1; u1 = u2;
    }
    // ra = gcd (a unit since Phi_n is irreducible); inverse = u0 / ra
    if (ra.size() != 1 || ra[0] == 0)
        throw std::logic_error("cyclotomic inverse: gcd not a unit");
    for (auto& v : u0) v /= ra[0];
    return from_coeffs(n_, u0);
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic r(1), base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool Cyclotomic::is_root_of_unity() const {
    if (is_zero()) return false;
    long M = lcm_long(2, n_);
    return pow(M) == Cyclotomic(1);
}

Rational Cyclotomic::angle() const {
    if (!is_root_of_unity())
        throw std::invalid_argument("angle: not a root of unity");
    long M = lcm_long(2, n_);
    for (long k = 0; k < M; ++k)
        if (*this == root_of_unity(M, k)) return Rational(k, M);
    throw std::logic_error("angle: root of unity not found");
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_ ? -1 : 1;
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i] ? -1 : 1;
    }
    return 0;
}

std::string Cyclotomic::to_string() const {
    if (n_ == 1) return rational_to_string(c_[0]);
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << rational_to_string(c_[i]);
        if (i > 0) os << "*z" << n_ << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace stringyk
