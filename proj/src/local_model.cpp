#include "stringyk/local_model.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace stringyk {

namespace {
std::mutex cent_mtx;
// Subgroups are interned by their element set, so every centralizer with the
// same elements is one object and downstream per-group caches (character
// tables, conjugacy data) hit instead of rebuilding.
std::map<std::pair<const FiniteGroup*, std::vector<int>>, Subgroup> subgroup_cache;
std::map<const FiniteGroup*, GroupPtr> cent_keepalive;

const Subgroup& intern_subgroup(const GroupPtr& g, std::vector<int> elems) {
    cent_keepalive.emplace(g.get(), g);
    auto key = std::make_pair(g.get(), elems);
    auto it = subgroup_cache.find(key);
    if (it == subgroup_cache.end())
        it = subgroup_cache
                 .emplace(std::move(key), make_subgroup(g, std::move(elems)))
                 .first;
    return it->second;
}
} // namespace

const Subgroup& centralizer_of(const GroupPtr& g, int x) {
    std::lock_guard<std::mutex> lock(cent_mtx);
    return intern_subgroup(g, conjugacy_of(g).centralizers[x]);
}

const Subgroup& pair_centralizer_of(const GroupPtr& g, int g1, int g2) {
    std::lock_guard<std::mutex> lock(cent_mtx);
    const auto& cd = conjugacy_of(g);
    return intern_subgroup(
        g, intersect_sorted(cd.centralizers[g1], cd.centralizers[g2]));
}

void UnitaryModel::validate() const {
    if ((long)rho.size() != group->order)
        throw std::invalid_argument("model: one matrix per group element required");
    CycMatrix id = CycMatrix::identity(dim);
    if (rho[group->identity] != id)
        throw std::invalid_argument("model: identity must act as the identity");
    for (int a = 0; a < group->order; ++a) {
        if (rho[a].rows() != dim || rho[a].cols() != dim)
            throw std::invalid_argument("model: matrix dimension mismatch");
        if (rho[a].conj_transpose() * rho[a] != id)
            throw std::invalid_argument("model: matrix is not unitary");
    }
    for (int a = 0; a < group->order; ++a)
        for (int b = 0; b < group->order; ++b)
            if (rho[group->mul[a][b]] != rho[a] * rho[b])
                throw std::invalid_argument("model: not a homomorphism");
}

UnitaryModel make_model(GroupPtr group, std::vector<CycMatrix> matrices) {
    UnitaryModel m;
    m.group = std::move(group);
    m.dim = matrices.empty() ? 0 : matrices[0].rows();
    m.rho = std::move(matrices);
    m.validate();
    return m;
}

UnitaryModel cyclic_weights_model(long n, const std::vector<long>& weights) {
    GroupPtr g = build_cyclic(n);
    long d = (long)weights.size();
    std::vector<CycMatrix> mats;
    for (long a = 0; a < n; ++a) {
        CycMatrix m(d, d);
        for (long t = 0; t < d; ++t)
            m.at(t, t) = Cyclotomic::root_of_unity(n, a * weights[t]);
        mats.push_back(std::move(m));
    }
    return make_model(std::move(g), std::move(mats));
}

Cyclotomic cyclotomic_sqrt(long m) {
    if (m <= 0) throw std::invalid_argument("cyclotomic_sqrt: positive input required");
    long square_free = m, k = 1;
    for (long d = 2; d * d <= square_free; ++d)
        while (square_free % (d * d) == 0) {
            square_free /= d * d;
            k *= d;
        }
    Cyclotomic r(k);
    long rest = square_free;
    for (long p = 2; p <= rest; ++p) {
        if (rest % p != 0) continue;
        rest /= p;
        if (p == 2) {
            r *= Cyclotomic::root_of_unity(8, 1) + Cyclotomic::root_of_unity(8, 7);
            continue;
        }
        // quadratic Gauss sum: sum of legendre(a) zeta_p^a is sqrt(p) for
        // p = 1 mod 4 and i sqrt(p) for p = 3 mod 4
        Cyclotomic gauss;
        for (long a = 1; a < p; ++a) {
            long ls = 1, base = a % p, e = (p - 1) / 2;
            while (e > 0) {
                if (e & 1) ls = ls * base % p;
                base = base * base % p;
                e >>= 1;
            }
            Cyclotomic term = Cyclotomic::root_of_unity(p, a);
            gauss += ls == 1 ? term : -term;
        }
        if (p % 4 == 3) gauss *= Cyclotomic::root_of_unity(4, 3);
        r *= gauss;
    }
    if (r * r != Cyclotomic(m))
        throw std::logic_error("cyclotomic_sqrt: verification failed");
    return r;
}

UnitaryModel symmetric_standard_model(long n) {
    GroupPtr g = build_symmetric(n);
    // elements are the lexicographically sorted permutations of 0..n-1
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> perms;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    long d = n - 1;
    // orthonormal basis u_k = (e_0 + ... + e_{k-1} - k e_k)/sqrt(k(k+1))
    std::vector<Cyclotomic> norm_inv(d + 1);
    for (long k = 1; k <= d; ++k)
        norm_inv[k] = cyclotomic_sqrt(k * (k + 1)).inverse();
    auto unnormalized = [&](long k) {
        std::vector<long> v(n, 0);
        for (long i = 0; i < k; ++i) v[i] = 1;
        v[k] = -k;
        return v;
    };
    std::vector<CycMatrix> mats;
    for (const auto& sigma : perms) {
        CycMatrix m(d, d);
        for (long k = 1; k <= d; ++k) {
            std::vector<long> w = unnormalized(k), moved(n, 0);
            for (long i = 0; i < n; ++i) moved[sigma[i]] = w[i];
            for (long j = 1; j <= d; ++j) {
                std::vector<long> u = unnormalized(j);
                long dot = 0;
                for (long i = 0; i < n; ++i) dot += u[i] * moved[i];
                if (dot != 0)
                    m.at(j - 1, k - 1) = Cyclotomic(dot) * norm_inv[j] * norm_inv[k];
            }
        }
        mats.push_back(std::move(m));
    }
    return make_model(std::move(g), std::move(mats));
}

UnitaryModel dihedral_standard_model(long n) {
    GroupPtr g = build_dihedral(n);
    std::vector<CycMatrix> mats(2 * n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < 2; ++j) {
            CycMatrix m(2, 2);
            if (j == 0) {
                m.at(0, 0) = Cyclotomic::root_of_unity(n, i);
                m.at(1, 1) = Cyclotomic::root_of_unity(n, n - i);
            } else {
                m.at(0, 1) = Cyclotomic::root_of_unity(n, i);
                m.at(1, 0) = Cyclotomic::root_of_unity(n, n - i);
            }
            mats[i + n * j] = std::move(m);
        }
    return make_model(std::move(g), std::move(mats));
}

UnitaryModel quaternion_standard_model() {
    GroupPtr g = build_quaternion8();
    Cyclotomic iu = Cyclotomic::root_of_unity(4, 1);
    auto mat = [&](Cyclotomic a, Cyclotomic b, Cyclotomic c, Cyclotomic d) {
        CycMatrix m(2, 2);
        m.at(0, 0) = a; m.at(0, 1) = b; m.at(1, 0) = c; m.at(1, 1) = d;
        return m;
    };
    // elements: 1, -1, i, -i, j, -j, k, -k
    std::vector<CycMatrix> base = {
        mat(Cyclotomic(1), Cyclotomic(0), Cyclotomic(0), Cyclotomic(1)),
        mat(iu, Cyclotomic(0), Cyclotomic(0), -iu),
        mat(Cyclotomic(0), Cyclotomic(1), Cyclotomic(-1), Cyclotomic(0)),
        mat(Cyclotomic(0), iu, iu, Cyclotomic(0))};
    std::vector<CycMatrix> mats;
    for (int a = 0; a < 8; ++a) {
        CycMatrix m = base[a / 2];
        if (a % 2) m = m.scale(Cyclotomic(-1));
        mats.push_back(std::move(m));
    }
    return make_model(std::move(g), std::move(mats));
}

UnitaryModel regular_model(const GroupPtr& g) {
    std::vector<CycMatrix> mats;
    for (int a = 0; a < g->order; ++a) mats.push_back(regular_rep_matrix(*g, a));
    return make_model(g, std::move(mats));
}

UnitaryModel permutation_model(const GroupPtr& g,
                               const std::vector<std::vector<int>>& perms) {
    if ((long)perms.size() != g->order)
        throw std::invalid_argument("permutation_model: one permutation per element");
    long deg = (long)perms[0].size();
    std::vector<CycMatrix> mats;
    for (int a = 0; a < g->order; ++a) {
        CycMatrix m(deg, deg);
        for (long v = 0; v < deg; ++v) m.at(perms[a][v], v) = Cyclotomic(1);
        mats.push_back(std::move(m));
    }
    return make_model(g, std::move(mats));
}

UnitaryModel symmetric_perm_model(long n) {
    GroupPtr g = build_symmetric(n);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> perms;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return permutation_model(g, perms);
}

UnitaryModel dihedral_perm_model(long n) {
    GroupPtr g = build_dihedral(n);
    std::vector<std::vector<int>> perms(2 * n, std::vector<int>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < 2; ++j)
            for (long v = 0; v < n; ++v)
                perms[i + n * j][v] = (int)(((j ? i - v : i + v) % n + n) % n);
    return permutation_model(g, perms);
}

namespace {
// All spectral projectors of rho_g at once; the powers are computed a single
// time, which matters in the per-pair obstruction loops.
std::vector<CycMatrix> eigen_projector_family(const CycMatrix& rho_g, long m) {
    long d = rho_g.rows();
    std::vector<CycMatrix> pw(m, CycMatrix::identity(d));
    for (long j = 1; j < m; ++j) pw[j] = pw[j - 1] * rho_g;
    Cyclotomic inv_m(Rational(1, m));
    std::vector<CycMatrix> out;
    for (long k = 0; k < m; ++k) {
        CycMatrix p(d, d);
        for (long j = 0; j < m; ++j) {
            Cyclotomic w =
                Cyclotomic::root_of_unity(m, ((-k * j) % m + m) % m) * inv_m;
            p = p + pw[j].scale(w);
        }
        out.push_back(std::move(p));
    }
    return out;
}
} // namespace

CycMatrix eigen_projector(const CycMatrix& rho_g, long m, long k) {
    long d = rho_g.rows();
    CycMatrix p(d, d), pw = CycMatrix::identity(d);
    Cyclotomic inv_m(Rational(1, m));
    for (long j = 0; j < m; ++j) {
        Cyclotomic w = Cyclotomic::root_of_unity(m, ((-k * j) % m + m) % m) * inv_m;
        p = p + pw.scale(w);
        if (j + 1 < m) pw = pw * rho_g;
    }
    return p;
}

namespace {

// Exact eigenvalue multiplicities of g on V from power-character sums;
// index k means eigenvalue zeta_m^k, m = order(g).
std::vector<long> eigen_multiplicities(const UnitaryModel& model, int g) {
    const FiniteGroup& grp = *model.group;
    long m = grp.element_order(g);
    std::vector<Cyclotomic> power_trace(m);
    int pw = grp.identity;
    for (long j = 0; j < m; ++j) {
        power_trace[j] = model.at(pw).trace();
        pw = grp.mul[pw][g];
    }
    Cyclotomic inv_m(Rational(1, m));
    std::vector<long> mult(m);
    long total = 0;
    for (long k = 0; k < m; ++k) {
        Cyclotomic s;
        for (long j = 0; j < m; ++j)
            s += power_trace[j] *
                 Cyclotomic::root_of_unity(m, ((-k * j) % m + m) % m);
        s *= inv_m;
        if (!s.is_rational() || denominator(s.rational_value()) != 1 ||
            s.rational_value() < 0)
            throw InvariantViolation("eigen multiplicity is not a nonnegative integer");
        mult[k] = (long)numerator(s.rational_value());
        total += mult[k];
    }
    if (total != model.dim)
        throw InvariantViolation("eigen multiplicities do not sum to dim V");
    return mult;
}

ClassFunction projected_character(const UnitaryModel& model, const Subgroup& sub,
                                  const CycMatrix& proj) {
    return ClassFunction::from_elements(sub.group, [&](int z) {
        return (proj * model.at(sub.elems[z])).trace();
    });
}

} // namespace

SectorDatum sector_data(const UnitaryModel& m, int g) {
    long ord = m.group->element_order(g);
    std::vector<long> mult = eigen_multiplicities(m, g);
    SectorDatum s;
    s.g = g;
    s.fixed_dim = mult[0];
    s.age = 0;
    for (long k = 1; k < ord; ++k) {
        if (mult[k] == 0) continue;
        Rational theta(k, ord);
        s.angles.emplace_back(theta, mult[k]);
        s.age += theta * mult[k];
    }
    return s;
}

FractionalNormal fractional_normal(const UnitaryModel& m, int g, Direction dir) {
    const Subgroup& z = centralizer_of(m.group, g);
    TablePtr table = character_table(z.group);
    long ord = m.group->element_order(g);
    std::vector<CycMatrix> fam = eigen_projector_family(m.at(g), ord);
    VirtualCharacter acc{table, std::vector<Cyclotomic>(table->num_classes())};
    for (long k = 1; k < ord; ++k) {
        if (fam[k].is_zero()) continue;
        Rational theta(k, ord);
        Rational coeff = dir == Direction::Phi ? theta : Rational(1) - theta;
        VirtualCharacter part = decompose(projected_character(m, z, fam[k]), table);
        acc = acc + part.scale(Cyclotomic(coeff));
    }
    return FractionalNormal{&z, std::move(acc)};
}

ObstructionDatum obstruction_character(const UnitaryModel& m, int g1, int g2) {
    const FiniteGroup& grp = *m.group;
    const Subgroup& k = pair_centralizer_of(m.group, g1, g2);
    TablePtr table = character_table(k.group);
    int g12 = grp.mul[g1][g2];

    // W = V / V^H as a K-representation, H = <g1, g2>
    Subgroup h = generated_subgroup(m.group, {g1, g2});
    CycMatrix ph(m.dim, m.dim);
    for (int e : h.elems) ph = ph + m.at(e);
    ph = ph.scale(Cyclotomic(Rational(1, h.group->order)));
    ClassFunction total_cf = ClassFunction::from_elements(k.group, [&](int z) {
        const CycMatrix& rz = m.at(k.elems[z]);
        return (ph * rz).trace() - rz.trace();
    }); // starts as -chi_W

    const int slots[3] = {g1, g2, g12};
    std::vector<std::vector<CycMatrix>> fam(3);
    for (int slot = 0; slot < 3; ++slot)
        fam[slot] =
            eigen_projector_family(m.at(slots[slot]), grp.element_order(slots[slot]));
    for (int slot = 0; slot < 3; ++slot) {
        long ord = (long)fam[slot].size();
        for (long kk = 1; kk < ord; ++kk) {
            if (fam[slot][kk].is_zero()) continue;
            Rational coeff(kk, ord);
            if (slot == 2) coeff = Rational(1) - coeff; // Phi inverse weights
            total_cf = total_cf + projected_character(m, k, fam[slot][kk])
                                      .scale(Cyclotomic(coeff));
        }
    }

    ObstructionDatum d;
    d.g1 = g1;
    d.g2 = g2;
    d.k = &k;
    d.total = decompose(total_cf, table);
    if (!d.total.is_genuine())
        throw InvariantViolation("obstruction character is not genuine");

    if (grp.mul[g1][g2] == grp.mul[g2][g1]) {
        long m1 = grp.element_order(g1), m2 = grp.element_order(g2);
        ClassFunction recon = ClassFunction::zero(k.group);
        for (long k1 = 0; k1 < m1; ++k1)
            for (long k2 = 0; k2 < m2; ++k2) {
                if (k1 == 0 && k2 == 0) continue;
                if (fam[0][k1].is_zero() || fam[1][k2].is_zero()) continue;
                CycMatrix q = fam[0][k1] * fam[1][k2];
                Cyclotomic tr = q.trace();
                if (tr.is_zero()) continue;
                if (!tr.is_rational() || denominator(tr.rational_value()) != 1)
                    throw InvariantViolation("joint component dimension not integral");
                JointComponent jc{Rational(k1, m1), Rational(k2, m2), Rational(0),
                                  (long)numerator(tr.rational_value()),
                                  projected_character(m, k, q)};
                Rational tau = frac_mod1(jc.theta1 + jc.theta2);
                jc.theta12 = tau == 0 ? Rational(0) : Rational(1) - tau;
                Rational sum = jc.theta1 + jc.theta2 + jc.theta12;
                if (sum != 1 && sum != 2)
                    throw InvariantViolation("joint angles do not sum to 1 or 2");
                recon = recon + jc.chi.scale(Cyclotomic(sum - 1));
                d.components.push_back(std::move(jc));
            }
        if (recon != total_cf)
            throw InvariantViolation(
                "componentwise obstruction disagrees with the closed formula");
    }
    return d;
}

SectorReport sector_report(const UnitaryModel& m) {
    SectorReport r;
    const auto& cd = conjugacy_of(m.group);
    for (const auto& cls : cd.classes) r.sectors.push_back(sector_data(m, cls[0]));
    const PairSpace& ps = pair_space_of(m.group);
    for (const auto& orbit : ps.orbits) {
        int pt = orbit[0];
        r.pairs.push_back(obstruction_character(m, ps.pairs->base_point[pt],
                                                ps.pairs->labels[pt]));
    }
    return r;
}

} // namespace stringyk
