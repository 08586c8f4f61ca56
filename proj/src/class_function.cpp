#include "stringyk/class_function.hpp"

#include <map>
#include <mutex>

namespace stringyk {

namespace {
std::mutex cache_mtx;
std::map<const FiniteGroup*, std::pair<GroupPtr, ConjugacyData>> conj_cache;
std::map<const FiniteGroup*, std::pair<GroupPtr, PairSpace>> pair_cache;
} // namespace

const ConjugacyData& conjugacy_of(const GroupPtr& g) {
    std::lock_guard<std::mutex> lock(cache_mtx);
    auto it = conj_cache.find(g.get());
    if (it == conj_cache.end())
        it = conj_cache.emplace(g.get(), std::make_pair(g, conjugacy(*g))).first;
    return it->second.second;
}

int PairSpace::orbit_index(int g, int h) const {
    int p = pairs->inertia_index(g, h);
    return p < 0 ? -1 : orbit_of[p];
}

const PairSpace& pair_space_of(const GroupPtr& g) {
    std::lock_guard<std::mutex> lock(cache_mtx);
    auto it = pair_cache.find(g.get());
    if (it == pair_cache.end()) {
        PairSpace ps;
        ps.pairs = commuting_pairs(g);
        ps.orbits = ps.pairs->orbits();
        ps.orbit_of.assign(ps.pairs->size, -1);
        for (size_t i = 0; i < ps.orbits.size(); ++i)
            for (int p : ps.orbits[i]) ps.orbit_of[p] = (int)i;
        it = pair_cache.emplace(g.get(), std::make_pair(g, std::move(ps))).first;
    }
    return it->second.second;
}

ClassFunction::ClassFunction(GroupPtr group, std::vector<Cyclotomic> per_class)
    : group_(std::move(group)), v_(std::move(per_class)) {
    if ((long)v_.size() != (long)conjugacy_of(group_).classes.size())
        throw std::invalid_argument("class function: wrong number of values");
}

ClassFunction ClassFunction::zero(GroupPtr group) {
    size_t n = conjugacy_of(group).classes.size();
    return ClassFunction(std::move(group), std::vector<Cyclotomic>(n));
}

ClassFunction ClassFunction::indicator(GroupPtr group, int class_index) {
    ClassFunction f = zero(std::move(group));
    f.v_.at(class_index) = Cyclotomic(1);
    return f;
}

ClassFunction ClassFunction::delta_identity(GroupPtr group) {
    const auto& cd = conjugacy_of(group);
    int e = group->identity;
    return indicator(std::move(group), cd.class_of[e]);
}

ClassFunction ClassFunction::from_elements(GroupPtr group,
                                           const std::function<Cyclotomic(int)>& f) {
    const auto& cd = conjugacy_of(group);
    std::vector<Cyclotomic> v;
    v.reserve(cd.classes.size());
    for (const auto& cls : cd.classes) {
        Cyclotomic val = f(cls[0]);
        for (size_t i = 1; i < cls.size(); ++i)
            if (f(cls[i]) != val)
                throw std::invalid_argument("from_elements: not a class function");
        v.push_back(val);
    }
    return ClassFunction(std::move(group), std::move(v));
}

const Cyclotomic& ClassFunction::at_element(int g) const {
    return v_[conjugacy_of(group_).class_of[g]];
}

void ClassFunction::check_same(const ClassFunction& o) const {
    if (group_.get() != o.group_.get())
        throw std::invalid_argument("class functions over different groups");
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
    check_same(o);
    std::vector<Cyclotomic> v(v_.size());
    for (size_t i = 0; i < v_.size(); ++i) v[i] = v_[i] + o.v_[i];
    return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
    check_same(o);
    std::vector<Cyclotomic> v(v_.size());
    for (size_t i = 0; i < v_.size(); ++i) v[i] = v_[i] - o.v_[i];
    return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::scale(const Cyclotomic& s) const {
    std::vector<Cyclotomic> v(v_.size());
    for (size_t i = 0; i < v_.size(); ++i) v[i] = v_[i] * s;
    return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::conj() const {
    std::vector<Cyclotomic> v(v_.size());
    for (size_t i = 0; i < v_.size(); ++i) v[i] = v_[i].conj();
    return ClassFunction(group_, std::move(v));
}

bool ClassFunction::operator==(const ClassFunction& o) const {
    return group_.get() == o.group_.get() && v_ == o.v_;
}

ClassFunction pointwise(const ClassFunction& a, const ClassFunction& b) {
    std::vector<Cyclotomic> v(a.values().size());
    for (size_t i = 0; i < v.size(); ++i)
        v[i] = a.at_class((int)i) * b.at_class((int)i);
    if (a.group().get() != b.group().get())
        throw std::invalid_argument("class functions over different groups");
    return ClassFunction(a.group(), std::move(v));
}

ClassFunction convolution(const ClassFunction& a, const ClassFunction& b) {
    if (a.group().get() != b.group().get())
        throw std::invalid_argument("class functions over different groups");
    const FiniteGroup& g = *a.group();
    const auto& cd = conjugacy_of(a.group());
    std::vector<Cyclotomic> v(cd.classes.size());
    for (size_t c = 0; c < cd.classes.size(); ++c) {
        int target = cd.classes[c][0];
        Cyclotomic sum;
        for (int g1 = 0; g1 < g.order; ++g1) {
            const Cyclotomic& x = a.at_element(g1);
            if (x.is_zero()) continue;
            int g2 = g.mul[g.inv[g1]][target];
            sum += x * b.at_element(g2);
        }
        v[c] = sum;
    }
    return ClassFunction(a.group(), std::move(v));
}

PairClassFunction::PairClassFunction(GroupPtr group, std::vector<Cyclotomic> per_orbit)
    : group_(std::move(group)), v_(std::move(per_orbit)) {
    if ((long)v_.size() != (long)pair_space_of(group_).orbits.size())
        throw std::invalid_argument("pair class function: wrong number of values");
}

PairClassFunction PairClassFunction::zero(GroupPtr group) {
    size_t n = pair_space_of(group).orbits.size();
    return PairClassFunction(std::move(group), std::vector<Cyclotomic>(n));
}

PairClassFunction PairClassFunction::indicator(GroupPtr group, int orbit_index) {
    PairClassFunction f = zero(std::move(group));
    f.v_.at(orbit_index) = Cyclotomic(1);
    return f;
}

PairClassFunction PairClassFunction::constant(GroupPtr group, const Cyclotomic& c) {
    size_t n = pair_space_of(group).orbits.size();
    return PairClassFunction(std::move(group), std::vector<Cyclotomic>(n, c));
}

PairClassFunction PairClassFunction::from_pairs(
    GroupPtr group, const std::function<Cyclotomic(int, int)>& f) {
    const PairSpace& ps = pair_space_of(group);
    std::vector<Cyclotomic> v(ps.orbits.size());
    for (size_t o = 0; o < ps.orbits.size(); ++o) {
        int p = ps.orbits[o][0];
        v[o] = f(ps.pairs->base_point[p], ps.pairs->labels[p]);
    }
    return PairClassFunction(std::move(group), std::move(v));
}

const Cyclotomic& PairClassFunction::at(int g, int h) const {
    int o = pair_space_of(group_).orbit_index(g, h);
    if (o < 0) throw std::invalid_argument("pair does not commute");
    return v_[o];
}

void PairClassFunction::check_same(const PairClassFunction& o) const {
    if (group_.get() != o.group_.get())
        throw std::invalid_argument("pair class functions over different groups");
}

PairClassFunction PairClassFunction::operator+(const PairClassFunction& o) const {
    check_same(o);
    std::vector<Cyclotomic> v(v_.size());
    for (size_t i = 0; i < v_.size(); ++i) v[i] = v_[i] + o.v_[i];
    return PairClassFunction(group_, std::move(v));
}

PairClassFunction PairClassFunction::scale(const Cyclotomic& s) const {
    std::vector<Cyclotomic> v(v_.size());
    for (size_t i = 0; i < v_.size(); ++i) v[i] = v_[i] * s;
    return PairClassFunction(group_, std::move(v));
}

bool PairClassFunction::operator==(const PairClassFunction& o) const {
    return group_.get() == o.group_.get() && v_ == o.v_;
}

PairClassFunction pointwise(const PairClassFunction& a, const PairClassFunction& b) {
    if (a.group().get() != b.group().get())
        throw std::invalid_argument("pair class functions over different groups");
    std::vector<Cyclotomic> v(a.values().size());
    for (size_t i = 0; i < v.size(); ++i)
        v[i] = a.at_orbit((int)i) * b.at_orbit((int)i);
    return PairClassFunction(a.group(), std::move(v));
}

PairClassFunction pair_conv_second(const PairClassFunction& a,
                                   const PairClassFunction& b) {
    if (a.group().get() != b.group().get())
        throw std::invalid_argument("pair class functions over different groups");
    const FiniteGroup& g = *a.group();
    const PairSpace& ps = pair_space_of(a.group());
    const auto& cd = conjugacy_of(a.group());
    std::vector<Cyclotomic> v(ps.orbits.size());
    for (size_t o = 0; o < ps.orbits.size(); ++o) {
        int p = ps.orbits[o][0];
        int s = ps.pairs->base_point[p], h = ps.pairs->labels[p];
        Cyclotomic sum;
        for (int h1 : cd.centralizers[s]) {
            const Cyclotomic& x = a.at(s, h1);
            if (x.is_zero()) continue;
            int h2 = g.mul[g.inv[h1]][h];
            sum += x * b.at(s, h2);
        }
        v[o] = sum;
    }
    return PairClassFunction(a.group(), std::move(v));
}

PairClassFunction pair_pontryagin(const PairClassFunction& a,
                                  const PairClassFunction& b) {
    if (a.group().get() != b.group().get())
        throw std::invalid_argument("pair class functions over different groups");
    const FiniteGroup& g = *a.group();
    const PairSpace& ps = pair_space_of(a.group());
    const auto& cd = conjugacy_of(a.group());
    std::vector<Cyclotomic> v(ps.orbits.size());
    for (size_t o = 0; o < ps.orbits.size(); ++o) {
        int p = ps.orbits[o][0];
        int s = ps.pairs->base_point[p], h = ps.pairs->labels[p];
        Cyclotomic sum;
        // g1 g2 = s with g1, g2 in Z(h); g1 in Z(h) forces g2 in Z(h)
        // since s commutes with h.
        for (int g1 : cd.centralizers[h]) {
            const Cyclotomic& x = a.at(g1, h);
            if (x.is_zero()) continue;
            int g2 = g.mul[g.inv[g1]][s];
            if (g.mul[g2][h] != g.mul[h][g2]) continue;
            sum += x * b.at(g2, h);
        }
        v[o] = sum;
    }
    return PairClassFunction(a.group(), std::move(v));
}

ProductTable class_product_table(
    const GroupPtr& g,
    const std::function<ClassFunction(const ClassFunction&, const ClassFunction&)>& prod) {
    long n = (long)conjugacy_of(g).classes.size();
    ProductTable t(n, std::vector<std::vector<Cyclotomic>>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            t[i][j] = prod(ClassFunction::indicator(g, (int)i),
                           ClassFunction::indicator(g, (int)j))
                          .values();
    return t;
}

ProductTable pair_product_table(
    const GroupPtr& g,
    const std::function<PairClassFunction(const PairClassFunction&,
                                          const PairClassFunction&)>& prod) {
    long n = (long)pair_space_of(g).orbits.size();
    ProductTable t(n, std::vector<std::vector<Cyclotomic>>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            t[i][j] = prod(PairClassFunction::indicator(g, (int)i),
                           PairClassFunction::indicator(g, (int)j))
                          .values();
    return t;
}

} // namespace stringyk
