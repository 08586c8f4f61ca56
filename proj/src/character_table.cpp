#include "stringyk/character_table.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace stringyk {

namespace {

// ---- arithmetic mod a word-sized prime ----

long mulmod(long a, long b, long p) { return (long)((__int128)a * b % p); }

long powmod(long a, long e, long p) {
    long r = 1;
    a %= p;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

long invmod(long a, long p) { return powmod(a, p - 2, p); }

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long find_dixon_prime(long exponent, long group_order) {
    long p = exponent + 1;
    while (!(is_prime(p) && p > 2 * group_order)) p += exponent;
    return p;
}

long primitive_root(long p) {
    std::vector<long> prime_factors;
    long m = p - 1;
    for (long d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) prime_factors.push_back(m);
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long q : prime_factors)
            if (powmod(g, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

using ModVec = std::vector<long>;
using ModMat = std::vector<ModVec>; // row major

ModMat mat_mul(const ModMat& a, const ModMat& b, long p) {
    size_t n = a.size(), m = b[0].size(), k = b.size();
    ModMat r(n, ModVec(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (size_t j = 0; j < m; ++j)
                r[i][j] = (r[i][j] + mulmod(a[i][t], b[t][j], p)) % p;
        }
    return r;
}

// Kernel basis (columns) of a square matrix mod p.
std::vector<ModVec> mod_kernel(ModMat m, long p) {
    size_t n = m.size(), cols = m[0].size();
    std::vector<long> pivot_of_col(cols, -1);
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < n; ++c) {
        size_t pr = rank;
        while (pr < n && m[pr][c] == 0) ++pr;
        if (pr == n) continue;
        std::swap(m[pr], m[rank]);
        long inv = invmod(m[rank][c], p);
        for (size_t j = c; j < cols; ++j) m[rank][j] = mulmod(m[rank][j], inv, p);
        for (size_t r = 0; r < n; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            long f = m[r][c];
            for (size_t j = c; j < cols; ++j)
                m[r][j] = ((m[r][j] - mulmod(f, m[rank][j], p)) % p + p) % p;
        }
        pivot_of_col[c] = (long)rank;
        ++rank;
    }
    std::vector<ModVec> ker;
    for (size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        ModVec v(cols, 0);
        v[c] = 1;
        for (size_t cc = 0; cc < cols; ++cc)
            if (pivot_of_col[cc] >= 0) v[cc] = (p - m[pivot_of_col[cc]][c]) % p;
        ker.push_back(std::move(v));
    }
    return ker;
}

// Solve B X = Y where B is n x d with full column rank (mod p); X is d x k.
ModMat mod_solve_tall(ModMat b, ModMat y, long p) {
    size_t n = b.size(), d = b[0].size(), k = y[0].size();
    size_t rank = 0;
    std::vector<long> pivot_col(d, -1);
    for (size_t c = 0; c < d && rank < n; ++c) {
        size_t pr = rank;
        while (pr < n && b[pr][c] == 0) ++pr;
        if (pr == n) throw std::logic_error("mod_solve_tall: rank deficient");
        std::swap(b[pr], b[rank]);
        std::swap(y[pr], y[rank]);
        long inv = invmod(b[rank][c], p);
        for (size_t j = 0; j < d; ++j) b[rank][j] = mulmod(b[rank][j], inv, p);
        for (size_t j = 0; j < k; ++j) y[rank][j] = mulmod(y[rank][j], inv, p);
        for (size_t r = 0; r < n; ++r) {
            if (r == rank || b[r][c] == 0) continue;
            long f = b[r][c];
            for (size_t j = 0; j < d; ++j)
                b[r][j] = ((b[r][j] - mulmod(f, b[rank][j], p)) % p + p) % p;
            for (size_t j = 0; j < k; ++j)
                y[r][j] = ((y[r][j] - mulmod(f, y[rank][j], p)) % p + p) % p;
        }
        pivot_col[c] = (long)rank;
        ++rank;
    }
    ModMat x(d, ModVec(k, 0));
    for (size_t c = 0; c < d; ++c)
        for (size_t j = 0; j < k; ++j) x[c][j] = y[pivot_col[c]][j];
    return x;
}

struct DixonContext {
    const FiniteGroup& g;
    const ConjugacyData& cd;
    long r;           // number of classes
    long p;           // working prime
    long e;           // exponent of G
    long zroot;       // primitive e-th root of unity mod p
    std::vector<std::vector<std::vector<long>>> a; // a[i][j][k]
};

// Split the span of `basis` (columns, coordinates in class space) into common
// eigenspaces of the class matrices.
void split_subspace(const DixonContext& ctx, const std::vector<ModVec>& basis,
                    long next_matrix, std::vector<ModVec>& out) {
    long r = ctx.r, p = ctx.p;
    if (basis.size() == 1) {
        out.push_back(basis[0]);
        return;
    }
    for (long i = next_matrix; i < r; ++i) {
        // class matrix M_i: (M_i)_{kj} = a[i][j][k]
        ModMat mi(r, ModVec(r, 0));
        for (long j = 0; j < r; ++j)
            for (long k = 0; k < r; ++k) mi[k][j] = ctx.a[i][j][k] % p;
        // restriction C with M_i B = B C
        size_t d = basis.size();
        ModMat b(r, ModVec(d));
        for (long row = 0; row < r; ++row)
            for (size_t c = 0; c < d; ++c) b[row][c] = basis[c][row];
        ModMat mib = mat_mul(mi, b, p);
        ModMat c = mod_solve_tall(b, mib, p);
        // eigen-split of C
        std::vector<std::vector<ModVec>> pieces;
        size_t found = 0;
        for (long lam = 0; lam < p && found < d; ++lam) {
            ModMat shifted = c;
            for (size_t t = 0; t < d; ++t)
                shifted[t][t] = ((shifted[t][t] - lam) % p + p) % p;
            auto ker = mod_kernel(shifted, p);
            if (ker.empty()) continue;
            found += ker.size();
            // lift back: columns B * kervec
            std::vector<ModVec> lifted;
            for (const auto& kv : ker) {
                ModVec v(r, 0);
                for (long row = 0; row < r; ++row) {
                    long s = 0;
                    for (size_t t = 0; t < d; ++t)
                        s = (s + mulmod(basis[t][row], kv[t], p)) % p;
                    v[row] = s;
                }
                lifted.push_back(std::move(v));
            }
            pieces.push_back(std::move(lifted));
        }
        if (pieces.size() > 1 || (pieces.size() == 1 && pieces[0].size() < d)) {
            for (auto& piece : pieces) split_subspace(ctx, piece, i + 1, out);
            return;
        }
        // M_i acts as a scalar here; try the next class matrix
    }
    throw std::logic_error("class matrices failed to split a subspace");
}

TablePtr compute_character_table(const GroupPtr& gp) {
    const FiniteGroup& g = *gp;
    const ConjugacyData& cd = conjugacy_of(gp);
    long r = (long)cd.classes.size();
    long e = g.exponent();
    long p = find_dixon_prime(e, g.order);

    DixonContext ctx{g, cd, r, p, e, 0, {}};
    ctx.zroot = powmod(primitive_root(p), (p - 1) / e, p);

    // class multiplication constants
    ctx.a.assign(r, std::vector<std::vector<long>>(r, std::vector<long>(r, 0)));
    for (long i = 0; i < r; ++i)
        for (long k = 0; k < r; ++k) {
            int zk = cd.classes[k][0];
            for (int x : cd.classes[i]) {
                int y = g.mul[g.inv[x]][zk];
                ++ctx.a[i][cd.class_of[y]][k];
            }
        }

    // split the full class space into common eigenlines
    std::vector<ModVec> full;
    for (long t = 0; t < r; ++t) {
        ModVec v(r, 0);
        v[t] = 1;
        full.push_back(std::move(v));
    }
    std::vector<ModVec> lines;
    split_subspace(ctx, full, 0, lines);
    if ((long)lines.size() != r)
        throw std::logic_error("Dixon: wrong number of eigenlines");

    // per line: eigenvalues omega_i, then degree and character mod p
    std::vector<int> inverse_class(r);
    for (long i = 0; i < r; ++i)
        inverse_class[i] = cd.class_of[g.inv[cd.classes[i][0]]];

    std::vector<ClassFunction> rows;
    std::vector<long> degrees;
    for (const auto& v : lines) {
        long nz = 0;
        while (v[nz] == 0) ++nz;
        std::vector<long> omega(r);
        for (long i = 0; i < r; ++i) {
            // (M_i v)_nz / v_nz
            long s = 0;
            for (long j = 0; j < r; ++j)
                if (v[j] != 0) s = (s + (long)mulmod(ctx.a[i][j][nz], v[j], p)) % p;
            omega[i] = mulmod(s, invmod(v[nz], p), p);
        }
        long denom = 0;
        for (long i = 0; i < r; ++i)
            denom = (denom +
                     mulmod(mulmod(omega[i], omega[inverse_class[i]], p),
                            invmod((long)cd.classes[i].size() % p, p), p)) % p;
        long d2 = mulmod(g.order % p, invmod(denom, p), p);
        long deg = -1;
        for (long d = 1; d * d <= g.order; ++d)
            if (mulmod(d, d, p) == d2) { deg = d; break; }
        if (deg < 0) throw std::logic_error("Dixon: degree not found");
        std::vector<long> chi_mod(r);
        for (long i = 0; i < r; ++i)
            chi_mod[i] = mulmod(mulmod(deg, omega[i], p),
                                invmod((long)cd.classes[i].size() % p, p), p);

        // lift each value to an exact cyclotomic number
        std::vector<Cyclotomic> vals(r);
        for (long i = 0; i < r; ++i) {
            int rep = cd.classes[i][0];
            long m = g.element_order(rep);
            long zm = powmod(ctx.zroot, e / m, p); // primitive m-th root mod p
            long m_inv = invmod(m % p, p);
            Cyclotomic val;
            int pw = g.identity;
            std::vector<long> chi_pow(m);
            for (long t = 0; t < m; ++t) {
                chi_pow[t] = chi_mod[cd.class_of[pw]];
                pw = g.mul[pw][rep];
            }
            for (long s = 0; s < m; ++s) {
                long mu = 0;
                for (long t = 0; t < m; ++t)
                    mu = (mu + mulmod(chi_pow[t],
                                      powmod(invmod(zm, p), s * t, p), p)) % p;
                mu = mulmod(mu, m_inv, p);
                if (mu > g.order)
                    throw std::logic_error("Dixon: multiplicity lift out of range");
                if (mu != 0)
                    val += Cyclotomic(Rational((long)mu)) * Cyclotomic::root_of_unity(m, s);
            }
            vals[i] = val;
        }
        degrees.push_back(deg);
        rows.push_back(ClassFunction(gp, std::move(vals)));
    }

    // sort rows by degree, then lexicographically with larger values first,
    // so the trivial character leads its degree block
    std::vector<long> idx(r);
    for (long i = 0; i < r; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](long a, long b) {
        if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
        for (long c = 0; c < r; ++c) {
            int cmp = Cyclotomic::compare(rows[a].at_class((int)c),
                                          rows[b].at_class((int)c));
            if (cmp != 0) return cmp > 0;
        }
        return false;
    });

    auto table = std::make_shared<CharacterTable>();
    table->group = gp;
    for (long i : idx) {
        table->irreducibles.push_back(rows[i]);
        table->degrees.push_back(degrees[i]);
    }

    // verify both orthogonality relations and the degree sum
    long degsum = 0;
    for (long d : table->degrees) degsum += d * d;
    if (degsum != g.order)
        throw InvariantViolation("character table: sum of squared degrees wrong");
    Cyclotomic order(Rational(g.order));
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < r; ++j) {
            Cyclotomic s;
            for (long c = 0; c < r; ++c)
                s += Cyclotomic(Rational((long)cd.classes[c].size())) *
                     table->irreducibles[i].at_class((int)c) *
                     table->irreducibles[j].at_class((int)c).conj();
            if (s != (i == j ? order : Cyclotomic(0)))
                throw InvariantViolation("character table: row orthogonality fails");
        }
    for (long c1 = 0; c1 < r; ++c1)
        for (long c2 = 0; c2 < r; ++c2) {
            Cyclotomic s;
            for (long i = 0; i < r; ++i)
                s += table->irreducibles[i].at_class((int)c1) *
                     table->irreducibles[i].at_class((int)c2).conj();
            Cyclotomic expect =
                c1 == c2 ? Cyclotomic(Rational(g.order / (long)cd.classes[c1].size()))
                         : Cyclotomic(0);
            if (s != expect)
                throw InvariantViolation("character table: column orthogonality fails");
        }
    return table;
}

std::mutex table_mtx;
std::map<const FiniteGroup*, TablePtr> table_cache;

} // namespace

TablePtr character_table(const GroupPtr& g) {
    {
        std::lock_guard<std::mutex> lock(table_mtx);
        auto it = table_cache.find(g.get());
        if (it != table_cache.end()) return it->second;
    }
    TablePtr t = compute_character_table(g);
    std::lock_guard<std::mutex> lock(table_mtx);
    table_cache[g.get()] = t;
    return t;
}

bool VirtualCharacter::is_integral() const {
    for (const auto& m : mult)
        if (!m.is_rational() || denominator(m.rational_value()) != 1) return false;
    return true;
}

bool VirtualCharacter::is_genuine() const {
    if (!is_integral()) return false;
    for (const auto& m : mult)
        if (m.rational_value() < 0) return false;
    return true;
}

bool VirtualCharacter::is_rational() const {
    for (const auto& m : mult)
        if (!m.is_rational()) return false;
    return true;
}

Cyclotomic VirtualCharacter::rank() const {
    Cyclotomic s;
    for (size_t i = 0; i < mult.size(); ++i)
        s += mult[i] * Cyclotomic(Rational(table->degrees[i]));
    return s;
}

ClassFunction VirtualCharacter::to_class_function() const {
    ClassFunction f = ClassFunction::zero(table->group);
    for (size_t i = 0; i < mult.size(); ++i)
        if (!mult[i].is_zero()) f = f + table->irreducibles[i].scale(mult[i]);
    return f;
}

VirtualCharacter VirtualCharacter::operator+(const VirtualCharacter& o) const {
    if (table.get() != o.table.get())
        throw std::invalid_argument("virtual characters over different tables");
    VirtualCharacter r{table, mult};
    for (size_t i = 0; i < mult.size(); ++i) r.mult[i] += o.mult[i];
    return r;
}

VirtualCharacter VirtualCharacter::operator-(const VirtualCharacter& o) const {
    if (table.get() != o.table.get())
        throw std::invalid_argument("virtual characters over different tables");
    VirtualCharacter r{table, mult};
    for (size_t i = 0; i < mult.size(); ++i) r.mult[i] -= o.mult[i];
    return r;
}

VirtualCharacter VirtualCharacter::scale(const Cyclotomic& s) const {
    VirtualCharacter r{table, mult};
    for (auto& m : r.mult) m *= s;
    return r;
}

VirtualCharacter decompose(const ClassFunction& f, TablePtr t) {
    if (f.group().get() != t->group.get())
        throw std::invalid_argument("decompose: group mismatch");
    const auto& cd = conjugacy_of(t->group);
    long r = t->num_classes();
    Cyclotomic inv_order = Cyclotomic(Rational(1, t->group->order));
    VirtualCharacter vc{t, std::vector<Cyclotomic>(r)};
    for (long i = 0; i < r; ++i) {
        Cyclotomic s;
        for (long c = 0; c < r; ++c)
            s += Cyclotomic(Rational((long)cd.classes[c].size())) * f.at_class((int)c) *
                 t->irreducibles[i].at_class((int)c).conj();
        vc.mult[i] = s * inv_order;
    }
    return vc;
}

CycMatrix regular_rep_matrix(const FiniteGroup& g, int x) {
    CycMatrix m(g.order, g.order);
    for (int h = 0; h < g.order; ++h) m.at(g.mul[x][h], h) = Cyclotomic(1);
    return m;
}

std::vector<CycMatrix> isotypic_projectors(const TablePtr& t) {
    const FiniteGroup& g = *t->group;
    std::vector<CycMatrix> ps;
    for (long i = 0; i < t->num_classes(); ++i) {
        CycMatrix p(g.order, g.order);
        Cyclotomic w = Cyclotomic(Rational(t->degrees[i], g.order));
        for (int x = 0; x < g.order; ++x) {
            Cyclotomic c = t->irreducibles[i].at_element(x).conj() * w;
            if (c.is_zero()) continue;
            for (int h = 0; h < g.order; ++h) p.at(g.mul[x][h], h) += c;
        }
        ps.push_back(std::move(p));
    }
    return ps;
}

} // namespace stringyk
