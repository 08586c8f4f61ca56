#include "stringyk/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace stringyk {

long FiniteGroup::element_order(int g) const {
    long k = 1;
    int x = g;
    while (x != identity) {
        x = mul[x][g];
        ++k;
    }
    return k;
}

long FiniteGroup::exponent() const {
    long e = 1;
    for (int g = 0; g < order; ++g) e = lcm_long(e, element_order(g));
    return e;
}

void FiniteGroup::validate() const {
    if (order <= 0 || (long)mul.size() != order || (long)inv.size() != order)
        throw std::invalid_argument("group table: bad shape");
    for (int a = 0; a < order; ++a) {
        if ((long)mul[a].size() != order)
            throw std::invalid_argument("group table: bad row length");
        for (int b = 0; b < order; ++b)
            if (mul[a][b] < 0 || mul[a][b] >= order)
                throw std::invalid_argument("group table: entry out of range");
    }
    for (int a = 0; a < order; ++a)
        if (inv[a] < 0 || inv[a] >= order) {
            std::ostringstream os;
            os << "group table: element " << a << " has no inverse";
            throw std::invalid_argument(os.str());
        }
    for (int a = 0; a < order; ++a) {
        if (mul[identity][a] != a || mul[a][identity] != a) {
            std::ostringstream os;
            os << "group table: identity fails at element " << a;
            throw std::invalid_argument(os.str());
        }
        if (mul[a][inv[a]] != identity || mul[inv[a]][a] != identity) {
            std::ostringstream os;
            os << "group table: inverse fails at element " << a;
            throw std::invalid_argument(os.str());
        }
    }
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            for (int c = 0; c < order; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) {
                    std::ostringstream os;
                    os << "group table: associativity fails at triple (" << a
                       << "," << b << "," << c << ")";
                    throw std::invalid_argument(os.str());
                }
}

namespace {

GroupPtr finish_group(FiniteGroup g) {
    // derive inverses and identity if not set
    g.inv.assign(g.order, -1);
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            if (g.mul[a][b] == g.identity && g.mul[b][a] == g.identity) g.inv[a] = b;
    g.validate();
    return std::make_shared<FiniteGroup>(std::move(g));
}

} // namespace

GroupPtr build_cyclic(long n) {
    if (n < 1) throw std::invalid_argument("cyclic: n must be positive");
    FiniteGroup g;
    g.order = n;
    g.mul.assign(n, std::vector<int>(n));
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) g.mul[a][b] = (int)((a + b) % n);
    g.identity = 0;
    for (long a = 0; a < n; ++a) g.names.push_back("g^" + std::to_string(a));
    return finish_group(std::move(g));
}

namespace {

std::string perm_name(const std::vector<int>& p) {
    // cycle notation on 1-based symbols
    long n = (long)p.size();
    std::vector<bool> seen(n, false);
    std::ostringstream os;
    bool any = false;
    for (long i = 0; i < n; ++i) {
        if (seen[i] || p[i] == i) continue;
        os << "(";
        long j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) os << " ";
            os << j + 1;
            first = false;
            j = p[j];
        }
        os << ")";
        any = true;
    }
    if (!any) return "e";
    return os.str();
}

GroupPtr group_from_perm_list(std::vector<std::vector<int>> elems) {
    std::sort(elems.begin(), elems.end());
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = (int)i;
    FiniteGroup g;
    g.order = (long)elems.size();
    g.mul.assign(g.order, std::vector<int>(g.order));
    long deg = (long)elems[0].size();
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) {
            std::vector<int> c(deg);
            for (long i = 0; i < deg; ++i) c[i] = elems[a][elems[b][i]];
            auto it = index.find(c);
            if (it == index.end())
                throw std::invalid_argument("permutation set not closed");
            g.mul[a][b] = it->second;
        }
    std::vector<int> id(deg);
    std::iota(id.begin(), id.end(), 0);
    g.identity = index.at(id);
    for (int a = 0; a < g.order; ++a) g.names.push_back(perm_name(elems[a]));
    return finish_group(std::move(g));
}

} // namespace

GroupPtr build_symmetric(long n, long order_cap) {
    if (n < 1 || n > 5) throw std::invalid_argument("symmetric: n must be in 1..5");
    long fact = 1;
    for (long i = 2; i <= n; ++i) fact *= i;
    if (fact > order_cap)
        throw std::invalid_argument("symmetric: order exceeds cap");
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> elems;
    do elems.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return group_from_perm_list(std::move(elems));
}

GroupPtr build_dihedral(long n, long order_cap) {
    if (n < 1) throw std::invalid_argument("dihedral: n must be positive");
    if (2 * n > order_cap) throw std::invalid_argument("dihedral: order exceeds cap");
    // element i + n*j = r^i s^j, with s r = r^{-1} s
    FiniteGroup g;
    g.order = 2 * n;
    g.mul.assign(g.order, std::vector<int>(g.order));
    for (long i1 = 0; i1 < n; ++i1)
        for (long j1 = 0; j1 < 2; ++j1)
            for (long i2 = 0; i2 < n; ++i2)
                for (long j2 = 0; j2 < 2; ++j2) {
                    long i = j1 == 0 ? (i1 + i2) % n : ((i1 - i2) % n + n) % n;
                    long j = (j1 + j2) % 2;
                    g.mul[i1 + n * j1][i2 + n * j2] = (int)(i + n * j);
                }
    g.identity = 0;
    g.names.resize(g.order);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < 2; ++j)
            g.names[i + n * j] =
                j ? "r^" + std::to_string(i) + "*s" : "r^" + std::to_string(i);
    return finish_group(std::move(g));
}

GroupPtr build_quaternion8() {
    // elements: 0..7 = 1, -1, i, -i, j, -j, k, -k
    auto enc = [](int sign, int axis) { return 2 * axis + (sign < 0 ? 1 : 0); };
    // quaternion multiplication on (sign, axis) with axes 0=1,1=i,2=j,3=k
    static const int ax[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sg[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    FiniteGroup g;
    g.order = 8;
    g.mul.assign(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int sa = a % 2 ? -1 : 1, aa = a / 2;
            int sb = b % 2 ? -1 : 1, ab = b / 2;
            g.mul[a][b] = enc(sa * sb * sg[aa][ab], ax[aa][ab]);
        }
    g.identity = 0;
    g.names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return finish_group(std::move(g));
}

GroupPtr build_from_permutations(const std::vector<std::vector<int>>& gens,
                                 long order_cap) {
    if (gens.empty()) throw std::invalid_argument("permutation generators: empty");
    long deg = (long)gens[0].size();
    for (const auto& p : gens) {
        if ((long)p.size() != deg)
            throw std::invalid_argument("permutation generators: mixed degrees");
        std::vector<bool> seen(deg, false);
        for (int v : p) {
            if (v < 0 || v >= deg || seen[v])
                throw std::invalid_argument("permutation generators: not a permutation");
            seen[v] = true;
        }
    }
    std::vector<int> id(deg);
    std::iota(id.begin(), id.end(), 0);
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> elems{id};
    index[id] = 0;
    for (size_t head = 0; head < elems.size(); ++head) {
        std::vector<int> cur = elems[head];
        for (const auto& gp : gens) {
            std::vector<int> nxt(deg);
            for (long i = 0; i < deg; ++i) nxt[i] = gp[cur[i]];
            if (!index.count(nxt)) {
                if ((long)elems.size() + 1 > order_cap)
                    throw std::invalid_argument("closure exceeds order cap");
                index[nxt] = (int)elems.size();
                elems.push_back(nxt);
            }
        }
    }
    return group_from_perm_list(std::move(elems));
}

GroupPtr build_from_table(std::vector<std::vector<int>> mul,
                          std::vector<std::string> names) {
    FiniteGroup g;
    g.order = (long)mul.size();
    g.mul = std::move(mul);
    // locate the identity
    g.identity = -1;
    for (int e = 0; e < g.order; ++e) {
        bool ok = true;
        for (int a = 0; a < g.order && ok; ++a)
            ok = g.mul[e][a] == a && g.mul[a][e] == a;
        if (ok) { g.identity = e; break; }
    }
    if (g.identity < 0) throw std::invalid_argument("group table: no identity element");
    if (names.empty())
        for (int a = 0; a < g.order; ++a) names.push_back("e" + std::to_string(a));
    g.names = std::move(names);
    return finish_group(std::move(g));
}

namespace {

void close_under_product(const FiniteGroup& g, std::vector<int>& closure,
                         std::vector<bool>& in_closure) {
    bool changed = true;
    while (changed) {
        changed = false;
        size_t n = closure.size();
        for (size_t h = 0; h < n; ++h)
            for (size_t k = 0; k < n; ++k) {
                int p = g.mul[closure[h]][closure[k]];
                if (!in_closure[p]) {
                    in_closure[p] = true;
                    closure.push_back(p);
                    changed = true;
                }
            }
    }
}

} // namespace

std::vector<int> generating_set(const FiniteGroup& g) {
    std::vector<int> gens;
    std::vector<bool> in_closure(g.order, false);
    std::vector<int> closure{g.identity};
    in_closure[g.identity] = true;
    for (int x = 0; x < g.order; ++x) {
        if (in_closure[x]) continue;
        gens.push_back(x);
        closure.push_back(x);
        in_closure[x] = true;
        close_under_product(g, closure, in_closure);
    }
    return gens;
}

ConjugacyData conjugacy(const FiniteGroup& g) {
    ConjugacyData cd;
    cd.class_of.assign(g.order, -1);
    std::vector<std::vector<int>> classes;
    for (int x = 0; x < g.order; ++x) {
        if (cd.class_of[x] >= 0) continue;
        std::vector<int> cls;
        std::vector<bool> seen(g.order, false);
        for (int k = 0; k < g.order; ++k) {
            int y = g.conj(k, x);
            if (!seen[y]) {
                seen[y] = true;
                cls.push_back(y);
            }
        }
        std::sort(cls.begin(), cls.end());
        int idx = (int)classes.size();
        for (int y : cls) cd.class_of[y] = idx;
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a[0] < b[0];
    });
    for (size_t i = 0; i < classes.size(); ++i)
        for (int y : classes[i]) cd.class_of[y] = (int)i;
    cd.classes = std::move(classes);
    cd.centralizers.resize(g.order);
    for (int x = 0; x < g.order; ++x)
        for (int k = 0; k < g.order; ++k)
            if (g.mul[k][x] == g.mul[x][k]) cd.centralizers[x].push_back(k);
    return cd;
}

void FiniteGSet::validate() const {
    const FiniteGroup& g = *group;
    if ((long)act.size() != g.order)
        throw std::invalid_argument("G-set: bad action table");
    for (int s = 0; s < size; ++s)
        if (act[g.identity][s] != s)
            throw std::invalid_argument("G-set: identity does not fix points");
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            for (int s = 0; s < size; ++s)
                if (act[a][act[b][s]] != act[g.mul[a][b]][s])
                    throw std::invalid_argument("G-set: action not compatible");
}

std::vector<std::vector<int>> FiniteGSet::orbits() const {
    std::vector<std::vector<int>> res;
    std::vector<bool> seen(size, false);
    for (int s = 0; s < size; ++s) {
        if (seen[s]) continue;
        std::vector<int> orb;
        for (int g = 0; g < group->order; ++g) {
            int t = act[g][s];
            if (!seen[t]) {
                seen[t] = true;
                orb.push_back(t);
            }
        }
        std::sort(orb.begin(), orb.end());
        res.push_back(std::move(orb));
    }
    return res; // first points are encountered in increasing order
}

std::vector<int> FiniteGSet::orbit_of_table() const {
    auto orbs = orbits();
    std::vector<int> t(size, -1);
    for (size_t i = 0; i < orbs.size(); ++i)
        for (int s : orbs[i]) t[s] = (int)i;
    return t;
}

std::vector<int> FiniteGSet::stabilizer(int s) const {
    std::vector<int> st;
    for (int g = 0; g < group->order; ++g)
        if (act[g][s] == s) st.push_back(g);
    return st;
}

GSetPtr point_set(GroupPtr g) {
    auto s = std::make_shared<FiniteGSet>();
    s->group = std::move(g);
    s->size = 1;
    s->act.assign(s->group->order, std::vector<int>(1, 0));
    return s;
}

GSetPtr conjugation_set(GroupPtr g) {
    auto s = std::make_shared<FiniteGSet>();
    s->group = g;
    s->size = g->order;
    s->act.assign(g->order, std::vector<int>(g->order));
    for (int k = 0; k < g->order; ++k)
        for (int x = 0; x < g->order; ++x) s->act[k][x] = g->conj(k, x);
    return s;
}

GSetPtr left_translation_set(GroupPtr g) {
    auto s = std::make_shared<FiniteGSet>();
    s->group = g;
    s->size = g->order;
    s->act = g->mul;
    return s;
}

GSetPtr inertia_set(GSetPtr src) {
    const FiniteGroup& g = *src->group;
    auto lam = std::make_shared<FiniteGSet>();
    lam->group = src->group;
    lam->source = src;
    lam->pair_index.assign(src->size * g.order, -1);
    for (int s = 0; s < src->size; ++s)
        for (int x = 0; x < g.order; ++x)
            if (src->act[x][s] == s) {
                lam->pair_index[s * g.order + x] = (int)lam->base_point.size();
                lam->base_point.push_back(s);
                lam->labels.push_back(x);
            }
    lam->size = (long)lam->base_point.size();
    lam->act.assign(g.order, std::vector<int>(lam->size));
    for (int k = 0; k < g.order; ++k)
        for (int i = 0; i < lam->size; ++i) {
            int s2 = src->act[k][lam->base_point[i]];
            int x2 = g.conj(k, lam->labels[i]);
            lam->act[k][i] = lam->pair_index[s2 * g.order + x2];
        }
    return lam;
}

GSetPtr commuting_pairs(GroupPtr g) {
    return inertia_set(conjugation_set(std::move(g)));
}

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

Subgroup make_subgroup(GroupPtr parent, std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    Subgroup sg;
    sg.parent = parent;
    sg.elems = elements;
    sg.from_parent.assign(parent->order, -1);
    for (size_t i = 0; i < elements.size(); ++i) sg.from_parent[elements[i]] = (int)i;
    FiniteGroup h;
    h.order = (long)elements.size();
    h.mul.assign(h.order, std::vector<int>(h.order));
    for (int a = 0; a < h.order; ++a)
        for (int b = 0; b < h.order; ++b) {
            int p = parent->mul[elements[a]][elements[b]];
            int q = sg.from_parent[p];
            if (q < 0) throw std::invalid_argument("subgroup: element set not closed");
            h.mul[a][b] = q;
        }
    h.identity = sg.from_parent[parent->identity];
    if (h.identity < 0) throw std::invalid_argument("subgroup: missing identity");
    for (int a = 0; a < h.order; ++a) h.names.push_back(parent->names[elements[a]]);
    h.inv.assign(h.order, -1);
    for (int a = 0; a < h.order; ++a) {
        int pi = parent->inv[elements[a]];
        h.inv[a] = sg.from_parent[pi];
        if (h.inv[a] < 0) throw std::invalid_argument("subgroup: not inverse-closed");
    }
    sg.group = std::make_shared<FiniteGroup>(std::move(h));
    return sg;
}

Subgroup centralizer_subgroup(GroupPtr g, int x) {
    std::vector<int> elems;
    for (int k = 0; k < g->order; ++k)
        if (g->mul[k][x] == g->mul[x][k]) elems.push_back(k);
    return make_subgroup(std::move(g), std::move(elems));
}

Subgroup generated_subgroup(GroupPtr g, const std::vector<int>& gens) {
    std::vector<bool> in(g->order, false);
    std::vector<int> closure{g->identity};
    in[g->identity] = true;
    for (int x : gens)
        if (!in[x]) {
            in[x] = true;
            closure.push_back(x);
        }
    close_under_product(*g, closure, in);
    return make_subgroup(std::move(g), std::move(closure));
}

} // namespace stringyk
