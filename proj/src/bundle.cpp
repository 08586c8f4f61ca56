#include "stringyk/bundle.hpp"

#include <map>
#include <mutex>

namespace stringyk {

namespace {
std::mutex gset_mtx;
std::map<const FiniteGSet*, std::pair<GSetPtr, OrbitData>> orbit_cache;
std::map<const FiniteGSet*, std::pair<GSetPtr, GSetPtr>> inertia_cache;
std::map<const FiniteGSet*, std::pair<GSetPtr, TwoSectorData>> two_sector_cache;
} // namespace

const OrbitData& orbit_data_of(const GSetPtr& s) {
    std::lock_guard<std::mutex> lock(gset_mtx);
    auto it = orbit_cache.find(s.get());
    if (it == orbit_cache.end()) {
        OrbitData d;
        d.orbits = s->orbits();
        d.orbit_of.assign(s->size, -1);
        for (size_t i = 0; i < d.orbits.size(); ++i)
            for (int p : d.orbits[i]) d.orbit_of[p] = (int)i;
        it = orbit_cache.emplace(s.get(), std::make_pair(s, std::move(d))).first;
    }
    return it->second.second;
}

const GSetPtr& inertia_of(const GSetPtr& s) {
    std::lock_guard<std::mutex> lock(gset_mtx);
    auto it = inertia_cache.find(s.get());
    if (it == inertia_cache.end())
        it = inertia_cache.emplace(s.get(), std::make_pair(s, inertia_set(s))).first;
    return it->second.second;
}

void EquivariantMap::validate() const {
    if (source->group.get() != target->group.get())
        throw std::invalid_argument("equivariant map: different groups");
    if ((long)to.size() != source->size)
        throw std::invalid_argument("equivariant map: wrong size");
    for (int g = 0; g < source->group->order; ++g)
        for (int s = 0; s < source->size; ++s)
            if (to[source->apply(g, s)] != target->apply(g, to[s]))
                throw std::invalid_argument("map is not equivariant");
}

EquivariantMap identity_map(const GSetPtr& s) {
    EquivariantMap f{s, s, std::vector<int>(s->size)};
    for (int i = 0; i < s->size; ++i) f.to[i] = i;
    return f;
}

EquivariantMap evaluation_map(const GSetPtr& lambda) {
    if (!lambda->is_inertia())
        throw std::invalid_argument("evaluation map: not an inertia set");
    EquivariantMap f{lambda, lambda->source, lambda->base_point};
    f.validate();
    return f;
}

void EquivariantBundle::validate() const {
    const FiniteGroup& g = *base->group;
    if ((long)fibers.size() != base->size ||
        (long)maps.size() != g.order)
        throw std::invalid_argument("bundle: shape mismatch");
    for (int a = 0; a < g.order; ++a) {
        if ((long)maps[a].size() != base->size)
            throw std::invalid_argument("bundle: shape mismatch");
        for (int s = 0; s < base->size; ++s) {
            const CycMatrix& m = maps[a][s];
            if (m.cols() != fibers[s] || m.rows() != fibers[base->apply(a, s)])
                throw std::invalid_argument("bundle: matrix dimension mismatch");
        }
    }
    for (int s = 0; s < base->size; ++s)
        if (maps[g.identity][s] != CycMatrix::identity(fibers[s]))
            throw std::invalid_argument("bundle: identity must act as the identity");
    // cocycle on generators; extends to all of G by induction on word length
    for (int h : generating_set(g))
        for (int a = 0; a < g.order; ++a)
            for (int s = 0; s < base->size; ++s)
                if (maps[g.mul[a][h]][s] != maps[a][base->apply(h, s)] * maps[h][s])
                    throw std::invalid_argument("bundle: cocycle violated");
    if (!phi.empty()) {
        if ((long)phi.size() != base->size)
            throw std::invalid_argument("bundle: automorphism shape mismatch");
        for (int s = 0; s < base->size; ++s)
            if (phi[s].rows() != fibers[s] || phi[s].cols() != fibers[s])
                throw std::invalid_argument("bundle: automorphism dimension mismatch");
        for (int a = 0; a < g.order; ++a)
            for (int s = 0; s < base->size; ++s)
                if (phi[base->apply(a, s)] * maps[a][s] != maps[a][s] * phi[s])
                    throw std::invalid_argument(
                        "bundle: automorphism does not commute with the action");
        long e = g.exponent();
        for (int s = 0; s < base->size; ++s)
            if (fibers[s] <= 16 &&
                phi[s].pow(e) != CycMatrix::identity(fibers[s]))
                throw std::invalid_argument("bundle: automorphism has infinite order");
    }
}

EquivariantBundle trivial_bundle(GSetPtr base, long rank) {
    EquivariantBundle e;
    e.base = std::move(base);
    e.fibers.assign(e.base->size, rank);
    e.maps.assign(e.base->group->order,
                  std::vector<CycMatrix>(e.base->size, CycMatrix::identity(rank)));
    return e;
}

EquivariantBundle make_bundle(GSetPtr base, std::vector<long> fibers,
                              std::vector<std::vector<CycMatrix>> maps) {
    EquivariantBundle e;
    e.base = std::move(base);
    e.fibers = std::move(fibers);
    e.maps = std::move(maps);
    e.validate();
    return e;
}

DelocalizedCharacter DelocalizedCharacter::zero(GSetPtr lambda) {
    size_t n = orbit_data_of(lambda).orbits.size();
    return DelocalizedCharacter{std::move(lambda), std::vector<Cyclotomic>(n)};
}

const Cyclotomic& DelocalizedCharacter::at(int s, int g) const {
    int p = lambda->inertia_index(s, g);
    if (p < 0) throw std::invalid_argument("point is not in the inertia set");
    return values[orbit_data_of(lambda).orbit_of[p]];
}

DelocalizedCharacter DelocalizedCharacter::operator+(
    const DelocalizedCharacter& o) const {
    if (lambda.get() != o.lambda.get())
        throw std::invalid_argument("characters over different inertia sets");
    DelocalizedCharacter r{lambda, values};
    for (size_t i = 0; i < values.size(); ++i) r.values[i] += o.values[i];
    return r;
}

DelocalizedCharacter DelocalizedCharacter::operator-(
    const DelocalizedCharacter& o) const {
    if (lambda.get() != o.lambda.get())
        throw std::invalid_argument("characters over different inertia sets");
    DelocalizedCharacter r{lambda, values};
    for (size_t i = 0; i < values.size(); ++i) r.values[i] -= o.values[i];
    return r;
}

DelocalizedCharacter DelocalizedCharacter::scale(const Cyclotomic& c) const {
    DelocalizedCharacter r{lambda, values};
    for (auto& v : r.values) v *= c;
    return r;
}

bool DelocalizedCharacter::operator==(const DelocalizedCharacter& o) const {
    return lambda.get() == o.lambda.get() && values == o.values;
}

DelocalizedCharacter deloc_character(const EquivariantBundle& e) {
    const GSetPtr& lambda = inertia_of(e.base);
    const OrbitData& od = orbit_data_of(lambda);
    DelocalizedCharacter c = DelocalizedCharacter::zero(lambda);
    for (size_t o = 0; o < od.orbits.size(); ++o) {
        int p = od.orbits[o][0];
        c.values[o] = e.at(lambda->labels[p], lambda->base_point[p]).trace();
    }
    return c;
}

EquivariantBundle pullback(const EquivariantMap& f, const EquivariantBundle& e) {
    f.validate();
    if (f.target.get() != e.base.get())
        throw std::invalid_argument("pullback: base mismatch");
    EquivariantBundle r;
    r.base = f.source;
    r.fibers.resize(f.source->size);
    for (int s = 0; s < f.source->size; ++s) r.fibers[s] = e.fibers[f(s)];
    r.maps.assign(e.maps.size(), std::vector<CycMatrix>(f.source->size));
    for (size_t g = 0; g < e.maps.size(); ++g)
        for (int s = 0; s < f.source->size; ++s)
            r.maps[g][s] = e.maps[g][f(s)];
    if (e.has_phi()) {
        r.phi.resize(f.source->size);
        for (int s = 0; s < f.source->size; ++s) r.phi[s] = e.phi[f(s)];
    }
    return r;
}

EquivariantBundle pushforward(const EquivariantMap& f, const EquivariantBundle& e) {
    f.validate();
    if (f.source.get() != e.base.get())
        throw std::invalid_argument("pushforward: base mismatch");
    const FiniteGroup& grp = *f.source->group;
    long nt = f.target->size;
    // fibers of the pushforward: ascending source points over each target point
    std::vector<std::vector<int>> fiber_pts(nt);
    for (int s = 0; s < f.source->size; ++s) fiber_pts[f(s)].push_back(s);
    std::vector<std::vector<long>> offset(nt);
    EquivariantBundle r;
    r.base = f.target;
    r.fibers.assign(nt, 0);
    for (int t = 0; t < nt; ++t) {
        for (int s : fiber_pts[t]) {
            offset[t].push_back(r.fibers[t]);
            r.fibers[t] += e.fibers[s];
        }
    }
    std::vector<long> slot_of(f.source->size), off_of(f.source->size);
    for (int t = 0; t < nt; ++t)
        for (size_t j = 0; j < fiber_pts[t].size(); ++j) {
            slot_of[fiber_pts[t][j]] = (long)j;
            off_of[fiber_pts[t][j]] = offset[t][j];
        }
    r.maps.assign(grp.order, std::vector<CycMatrix>());
    for (int g = 0; g < grp.order; ++g) {
        r.maps[g].reserve(nt);
        for (int t = 0; t < nt; ++t)
            r.maps[g].push_back(CycMatrix(r.fibers[f.target->apply(g, t)],
                                          r.fibers[t]));
        for (int s = 0; s < f.source->size; ++s) {
            int gs = f.source->apply(g, s);
            const CycMatrix& block = e.maps[g][s];
            CycMatrix& m = r.maps[g][f(s)];
            for (long i = 0; i < block.rows(); ++i)
                for (long j = 0; j < block.cols(); ++j)
                    m.at(off_of[gs] + i, off_of[s] + j) = block.at(i, j);
        }
    }
    if (e.has_phi()) {
        for (int t = 0; t < nt; ++t) {
            CycMatrix p(r.fibers[t], r.fibers[t]);
            for (size_t j = 0; j < fiber_pts[t].size(); ++j) {
                const CycMatrix& block = e.phi[fiber_pts[t][j]];
                for (long i = 0; i < block.rows(); ++i)
                    for (long jj = 0; jj < block.cols(); ++jj)
                        p.at(offset[t][j] + i, offset[t][j] + jj) = block.at(i, jj);
            }
            r.phi.push_back(std::move(p));
        }
    }
    return r;
}

EquivariantBundle tensor_bundle(const EquivariantBundle& a,
                                const EquivariantBundle& b) {
    if (a.base.get() != b.base.get())
        throw std::invalid_argument("tensor: base mismatch");
    EquivariantBundle r;
    r.base = a.base;
    r.fibers.resize(a.base->size);
    for (int s = 0; s < a.base->size; ++s) r.fibers[s] = a.fibers[s] * b.fibers[s];
    r.maps.assign(a.maps.size(), std::vector<CycMatrix>(a.base->size));
    for (size_t g = 0; g < a.maps.size(); ++g)
        for (int s = 0; s < a.base->size; ++s)
            r.maps[g][s] = a.maps[g][s].kron(b.maps[g][s]);
    if (a.has_phi() && b.has_phi()) {
        r.phi.resize(a.base->size);
        for (int s = 0; s < a.base->size; ++s)
            r.phi[s] = a.phi[s].kron(b.phi[s]);
    }
    return r;
}

std::vector<CycMatrix> canonical_automorphism(const EquivariantBundle& e) {
    if (!e.base->is_inertia())
        throw std::invalid_argument("canonical automorphism: not an inertia base");
    std::vector<CycMatrix> phi;
    phi.reserve(e.base->size);
    for (int p = 0; p < e.base->size; ++p) phi.push_back(e.maps[e.base->labels[p]][p]);
    return phi;
}

EquivariantBundle attach_canonical_automorphism(EquivariantBundle e) {
    e.phi = canonical_automorphism(e);
    e.validate();
    return e;
}

DelocalizedCharacter ch_phi(const EquivariantBundle& e) {
    std::vector<CycMatrix> own;
    const std::vector<CycMatrix>* phi = &e.phi;
    if (!e.has_phi()) {
        own = canonical_automorphism(e);
        phi = &own;
    }
    const OrbitData& od = orbit_data_of(e.base);
    DelocalizedCharacter c = DelocalizedCharacter::zero(e.base);
    for (size_t o = 0; o < od.orbits.size(); ++o)
        c.values[o] = (*phi)[od.orbits[o][0]].trace();
    return c;
}

const TwoSectorData& two_sector_of(const GSetPtr& lambda) {
    {
        std::lock_guard<std::mutex> lock(gset_mtx);
        auto it = two_sector_cache.find(lambda.get());
        if (it != two_sector_cache.end()) return it->second.second;
    }
    if (!lambda->is_inertia())
        throw std::invalid_argument("two sectors: not an inertia set");
    const GSetPtr& s_set = lambda->source;
    const FiniteGroup& g = *lambda->group;
    TwoSectorData d;
    auto l2 = std::make_shared<FiniteGSet>();
    l2->group = lambda->group;
    std::vector<std::vector<int>> stab(s_set->size);
    for (int s = 0; s < s_set->size; ++s) stab[s] = s_set->stabilizer(s);
    std::vector<int> index(s_set->size * g.order * g.order, -1);
    auto idx = [&](int s, int g1, int g2) -> int& {
        return index[(s * g.order + g1) * g.order + g2];
    };
    for (int s = 0; s < s_set->size; ++s)
        for (int g1 : stab[s])
            for (int g2 : stab[s]) {
                idx(s, g1, g2) = (int)d.base_of.size();
                d.base_of.push_back(s);
                d.first_of.push_back(g1);
                d.second_of.push_back(g2);
            }
    l2->size = (long)d.base_of.size();
    l2->act.assign(g.order, std::vector<int>(l2->size));
    for (int k = 0; k < g.order; ++k)
        for (int p = 0; p < l2->size; ++p)
            l2->act[k][p] = idx(s_set->apply(k, d.base_of[p]),
                                g.conj(k, d.first_of[p]),
                                g.conj(k, d.second_of[p]));
    l2->validate();
    d.lambda2 = l2;
    auto project = [&](const std::vector<int>& lab) {
        EquivariantMap f{d.lambda2, lambda, std::vector<int>(l2->size)};
        for (int p = 0; p < l2->size; ++p)
            f.to[p] = lambda->inertia_index(d.base_of[p], lab[p]);
        f.validate();
        return f;
    };
    d.e1 = project(d.first_of);
    d.e2 = project(d.second_of);
    std::vector<int> prod(l2->size);
    for (int p = 0; p < l2->size; ++p)
        prod[p] = g.mul[d.first_of[p]][d.second_of[p]];
    d.e12 = project(prod);
    std::lock_guard<std::mutex> lock(gset_mtx);
    auto it = two_sector_cache.find(lambda.get());
    if (it == two_sector_cache.end())
        it = two_sector_cache
                 .emplace(lambda.get(), std::make_pair(lambda, std::move(d)))
                 .first;
    return it->second.second;
}

} // namespace stringyk
