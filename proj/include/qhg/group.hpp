#pragma once

// Finite groups as validated multiplication tables, subgroups, coset
// decompositions, and a catalog of built-in groups. Element order is fixed at
// construction and never re-sorted afterwards: it determines basis order in
// every algebra built on top, and downstream reports must be stable.

#include <qhg/scalar.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhg {

inline long order_cap_default(long fallback) {
    if (const char* env = std::getenv("QHG_ORDER_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return fallback;
}

struct FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct FiniteGroup {
    int order = 0;
    std::vector<std::vector<int>> table;  // table[a][b] = a*b
    int identity = 0;
    std::vector<int> inverse;
    std::string name;

    int mul(int a, int b) const { return table[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
    int inv(int a) const { return inverse[static_cast<size_t>(a)]; }
};

// Latin-square + identity + inverse + associativity validation. Full
// associativity is cubic, so it is checked only up to a size bound; the
// permutation-closure builder below is associative by construction.
inline void validate_group_table(const std::vector<std::vector<int>>& t, bool check_assoc = true) {
    const int n = static_cast<int>(t.size());
    if (n == 0) throw std::invalid_argument("empty group table");
    for (const auto& row : t)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("ragged group table");
    for (int i = 0; i < n; ++i) {
        std::vector<bool> seen_row(static_cast<size_t>(n)), seen_col(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            int rij = t[static_cast<size_t>(i)][static_cast<size_t>(j)];
            int cij = t[static_cast<size_t>(j)][static_cast<size_t>(i)];
            if (rij < 0 || rij >= n || cij < 0 || cij >= n)
                throw std::invalid_argument("group table entry out of range");
            if (seen_row[static_cast<size_t>(rij)] || seen_col[static_cast<size_t>(cij)])
                throw std::invalid_argument("group table is not a Latin square");
            seen_row[static_cast<size_t>(rij)] = seen_col[static_cast<size_t>(cij)] = true;
        }
    }
    if (check_assoc && n <= 256) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (t[static_cast<size_t>(t[static_cast<size_t>(a)][static_cast<size_t>(b)])]
                         [static_cast<size_t>(c)] !=
                        t[static_cast<size_t>(a)]
                         [static_cast<size_t>(t[static_cast<size_t>(b)][static_cast<size_t>(c)])])
                        throw std::invalid_argument("group table is not associative");
    }
}

inline GroupPtr group_from_table(std::vector<std::vector<int>> t, std::string name = "",
                                 bool check_assoc = true) {
    validate_group_table(t, check_assoc);
    auto g = std::make_shared<FiniteGroup>();
    g->order = static_cast<int>(t.size());
    g->table = std::move(t);
    g->name = std::move(name);
    int id = -1;
    for (int e = 0; e < g->order; ++e) {
        bool ok = true;
        for (int a = 0; a < g->order && ok; ++a)
            ok = g->mul(e, a) == a && g->mul(a, e) == a;
        if (ok) {
            id = e;
            break;
        }
    }
    if (id < 0) throw std::invalid_argument("group table has no identity");
    g->identity = id;
    g->inverse.assign(static_cast<size_t>(g->order), -1);
    for (int a = 0; a < g->order; ++a) {
        for (int b = 0; b < g->order; ++b)
            if (g->mul(a, b) == id && g->mul(b, a) == id) {
                g->inverse[static_cast<size_t>(a)] = b;
                break;
            }
        if (g->inverse[static_cast<size_t>(a)] < 0)
            throw std::invalid_argument("group table element without inverse");
    }
    return g;
}

using Perm = std::vector<int>;

inline Perm perm_compose(const Perm& p, const Perm& q) {  // (p∘q)(x) = p(q(x))
    Perm r(q.size());
    for (size_t x = 0; x < q.size(); ++x) r[x] = p[static_cast<size_t>(q[x])];
    return r;
}

// BFS closure of permutation generators; element 0 is the identity, the rest
// appear in discovery order. Associativity is inherited from composition.
inline GroupPtr group_from_generators(int degree, const std::vector<Perm>& gens,
                                      long cap = -1, std::string name = "") {
    if (cap < 0) cap = order_cap_default(5040);
    if (degree <= 0) throw std::invalid_argument("degree must be positive");
    for (const Perm& p : gens) {
        if (static_cast<int>(p.size()) != degree)
            throw std::invalid_argument("generator degree mismatch");
        std::vector<bool> seen(static_cast<size_t>(degree));
        for (int v : p) {
            if (v < 0 || v >= degree || seen[static_cast<size_t>(v)])
                throw std::invalid_argument("generator is not a permutation");
            seen[static_cast<size_t>(v)] = true;
        }
    }
    Perm id(static_cast<size_t>(degree));
    for (int x = 0; x < degree; ++x) id[static_cast<size_t>(x)] = x;
    std::vector<Perm> elems{id};
    std::map<Perm, int> index{{id, 0}};
    for (size_t head = 0; head < elems.size(); ++head) {
        for (const Perm& gen : gens) {
            Perm nxt = perm_compose(elems[head], gen);
            if (index.emplace(nxt, static_cast<int>(elems.size())).second) {
                elems.push_back(std::move(nxt));
                if (static_cast<long>(elems.size()) > cap)
                    throw std::runtime_error("group closure exceeds order cap");
            }
        }
    }
    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto it = index.find(perm_compose(elems[static_cast<size_t>(a)],
                                              elems[static_cast<size_t>(b)]));
            if (it == index.end()) throw std::logic_error("closure not closed");
            t[static_cast<size_t>(a)][static_cast<size_t>(b)] = it->second;
        }
    return group_from_table(std::move(t), std::move(name), /*check_assoc=*/n <= 256);
}

struct Subgroup {
    GroupPtr parent;
    std::vector<int> elements;  // sorted ascending

    int order() const { return static_cast<int>(elements.size()); }
    bool contains(int x) const {
        return std::binary_search(elements.begin(), elements.end(), x);
    }
};

inline bool is_subgroup_set(const FiniteGroup& g, const std::vector<int>& elems) {
    if (elems.empty()) return false;
    std::set<int> s(elems.begin(), elems.end());
    if (!s.count(g.identity)) return false;
    for (int a : s) {
        if (a < 0 || a >= g.order) return false;
        if (!s.count(g.inv(a))) return false;
        for (int b : s)
            if (!s.count(g.mul(a, b))) return false;
    }
    return true;
}

inline void validate_subgroup(const Subgroup& k) {
    if (!k.parent) throw std::invalid_argument("subgroup without parent");
    if (!std::is_sorted(k.elements.begin(), k.elements.end()))
        throw std::invalid_argument("subgroup elements not sorted");
    if (!is_subgroup_set(*k.parent, k.elements))
        throw std::invalid_argument("element set is not a subgroup");
}

inline Subgroup make_subgroup(GroupPtr g, std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    Subgroup k{std::move(g), std::move(elems)};
    validate_subgroup(k);
    return k;
}

inline Subgroup subgroup_closure(GroupPtr g, const std::vector<int>& seed) {
    std::set<int> s{g->identity};
    for (int x : seed) {
        if (x < 0 || x >= g->order) throw std::invalid_argument("seed element out of range");
        s.insert(x);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(s.begin(), s.end());
        for (int a : cur)
            for (int b : cur)
                if (s.insert(g->mul(a, b)).second) grew = true;
        for (int a : cur)
            if (s.insert(g->inv(a)).second) grew = true;
    }
    return make_subgroup(std::move(g), std::vector<int>(s.begin(), s.end()));
}

struct CosetDecomposition {
    enum class Kind { Left, Right, Double } kind;
    std::vector<std::vector<int>> classes;  // each sorted; classes ordered by min element
};

namespace detail {
inline CosetDecomposition partition_by(const FiniteGroup& g, const Subgroup& k,
                                       CosetDecomposition::Kind kind) {
    std::vector<int> cls(static_cast<size_t>(g.order), -1);
    CosetDecomposition out{kind, {}};
    for (int q = 0; q < g.order; ++q) {
        if (cls[static_cast<size_t>(q)] >= 0) continue;
        std::set<int> orbit;
        switch (kind) {
            case CosetDecomposition::Kind::Left:  // qK
                for (int p : k.elements) orbit.insert(g.mul(q, p));
                break;
            case CosetDecomposition::Kind::Right:  // Kq
                for (int p : k.elements) orbit.insert(g.mul(p, q));
                break;
            case CosetDecomposition::Kind::Double:  // KqK
                for (int p : k.elements)
                    for (int p2 : k.elements) orbit.insert(g.mul(g.mul(p, q), p2));
                break;
        }
        int idx = static_cast<int>(out.classes.size());
        for (int x : orbit) cls[static_cast<size_t>(x)] = idx;
        out.classes.emplace_back(orbit.begin(), orbit.end());
    }
    return out;
}
}  // namespace detail

inline CosetDecomposition left_cosets(const FiniteGroup& g, const Subgroup& k) {
    return detail::partition_by(g, k, CosetDecomposition::Kind::Left);
}
inline CosetDecomposition right_cosets(const FiniteGroup& g, const Subgroup& k) {
    return detail::partition_by(g, k, CosetDecomposition::Kind::Right);
}
inline CosetDecomposition double_cosets(const FiniteGroup& g, const Subgroup& k) {
    return detail::partition_by(g, k, CosetDecomposition::Kind::Double);
}

inline bool is_normal(const FiniteGroup& g, const Subgroup& k) {
    for (int q = 0; q < g.order; ++q)
        for (int p : k.elements)
            if (!k.contains(g.mul(g.mul(q, p), g.inv(q)))) return false;
    return true;
}

inline Subgroup center(GroupPtr g) {
    std::vector<int> z;
    for (int a = 0; a < g->order; ++a) {
        bool central = true;
        for (int b = 0; b < g->order && central; ++b) central = g->mul(a, b) == g->mul(b, a);
        if (central) z.push_back(a);
    }
    return make_subgroup(std::move(g), std::move(z));
}

inline Subgroup derived_subgroup(GroupPtr g) {
    std::vector<int> comms;
    for (int a = 0; a < g->order; ++a)
        for (int b = 0; b < g->order; ++b)
            comms.push_back(g->mul(g->mul(a, b), g->mul(g->inv(a), g->inv(b))));
    return subgroup_closure(std::move(g), comms);
}

inline GroupPtr direct_product(const GroupPtr& g1, const GroupPtr& g2) {
    const int n1 = g1->order, n2 = g2->order;
    std::vector<std::vector<int>> t(static_cast<size_t>(n1 * n2),
                                    std::vector<int>(static_cast<size_t>(n1 * n2)));
    auto enc = [n2](int a, int b) { return a * n2 + b; };
    for (int a1 = 0; a1 < n1; ++a1)
        for (int b1 = 0; b1 < n2; ++b1)
            for (int a2 = 0; a2 < n1; ++a2)
                for (int b2 = 0; b2 < n2; ++b2)
                    t[static_cast<size_t>(enc(a1, b1))][static_cast<size_t>(enc(a2, b2))] =
                        enc(g1->mul(a1, a2), g2->mul(b1, b2));
    return group_from_table(std::move(t), g1->name + "x" + g2->name,
                            /*check_assoc=*/n1 * n2 <= 256);
}

// Quotient by a normal subgroup; elements are cosets ordered by their minimal
// member, which matches the RREF basis order of coset-indicator subspaces.
struct QuotientGroup {
    GroupPtr group;
    std::vector<std::vector<int>> cosets;     // coset i = sorted member list
    std::vector<int> coset_of;                // parent element -> coset index
};

inline QuotientGroup quotient_group(const GroupPtr& g, const Subgroup& k) {
    if (!is_normal(*g, k)) throw std::invalid_argument("quotient by non-normal subgroup");
    CosetDecomposition dec = left_cosets(*g, k);
    QuotientGroup q;
    q.cosets = dec.classes;
    q.coset_of.assign(static_cast<size_t>(g->order), -1);
    for (size_t i = 0; i < q.cosets.size(); ++i)
        for (int x : q.cosets[i]) q.coset_of[static_cast<size_t>(x)] = static_cast<int>(i);
    const int m = static_cast<int>(q.cosets.size());
    std::vector<std::vector<int>> t(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            t[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                q.coset_of[static_cast<size_t>(g->mul(q.cosets[static_cast<size_t>(a)][0],
                                                      q.cosets[static_cast<size_t>(b)][0]))];
    q.group = group_from_table(std::move(t), g->name + "/K");
    return q;
}

// A subgroup as a free-standing group, elements reindexed in ascending order.
inline GroupPtr subgroup_group(const GroupPtr& g, std::vector<int> elements,
                               std::string name = "") {
    std::sort(elements.begin(), elements.end());
    std::map<int, int> idx;
    for (size_t i = 0; i < elements.size(); ++i) idx[elements[i]] = static_cast<int>(i);
    const int m = static_cast<int>(elements.size());
    std::vector<std::vector<int>> t(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            auto it = idx.find(g->mul(elements[static_cast<size_t>(a)],
                                      elements[static_cast<size_t>(b)]));
            if (it == idx.end()) throw std::invalid_argument("subgroup_group: set not closed");
            t[static_cast<size_t>(a)][static_cast<size_t>(b)] = it->second;
        }
    if (name.empty()) name = g->name + " subgroup";
    return group_from_table(std::move(t), std::move(name));
}

// ---------------------------------------------------------------------------
// Catalog

struct CatalogEntry {
    GroupPtr group;
    std::map<std::string, std::vector<int>> subgroups;  // name -> element list
};

namespace detail {

inline GroupPtr cyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("cyclic(n) needs n >= 1");
    std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
    return group_from_table(std::move(t), "cyclic(" + std::to_string(n) + ")");
}

// Element a + n*b encodes r^a s^b with s r = r^{-1} s.
inline GroupPtr dihedral_group(int n) {
    if (n < 2) throw std::invalid_argument("dihedral(n) needs n >= 2");
    auto enc = [n](int a, int b) { return a + n * b; };
    const int m = 2 * n;
    std::vector<std::vector<int>> t(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < 2; ++d) {
                    int rot = b == 0 ? (a + c) % n : ((a - c) % n + n) % n;
                    t[static_cast<size_t>(enc(a, b))][static_cast<size_t>(enc(c, d))] =
                        enc(rot, b ^ d);
                }
    return group_from_table(std::move(t), "dihedral(" + std::to_string(n) + ")");
}

// All n! permutations in lexicographic one-line order; identity is index 0.
inline GroupPtr symmetric_group(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("symmetric(n) supports 1 <= n <= 4");
    std::vector<Perm> elems;
    Perm p(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) p[static_cast<size_t>(x)] = x;
    do {
        elems.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<Perm, int> index;
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
    const int m = static_cast<int>(elems.size());
    std::vector<std::vector<int>> t(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            t[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                index[perm_compose(elems[static_cast<size_t>(a)], elems[static_cast<size_t>(b)])];
    return group_from_table(std::move(t), "symmetric(" + std::to_string(n) + ")");
}

// Indices 0..7 = +1,-1,+i,-i,+j,-j,+k,-k.
inline GroupPtr quaternion_group() {
    auto axis = [](int x) { return x / 2; };
    auto neg = [](int x) { return x % 2; };
    auto enc = [](int ax, int ng) { return ax * 2 + ng; };
    // axis product table: (a,b) -> {axis, extra sign}
    static const int ax_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sg_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    // sg_mul uses i*j=+k, j*k=+i, k*i=+j, squares = -1:
    //   row=axis(a), col=axis(b); entry 1 means an extra minus sign.
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            int ax = ax_mul[axis(x)][axis(y)];
            int ng = (neg(x) + neg(y) + sg_mul[axis(x)][axis(y)]) % 2;
            t[static_cast<size_t>(x)][static_cast<size_t>(y)] = enc(ax, ng);
        }
    return group_from_table(std::move(t), "quaternion8");
}

inline std::vector<std::vector<int>> subgroup_conjugacy_reps(const GroupPtr& g) {
    // Enumerate subgroups as closures of generator sets of size <= 3, then
    // keep one representative per conjugacy class (the lexicographically
    // least element list). Only used for small groups.
    std::set<std::vector<int>> all;
    const int n = g->order;
    std::vector<std::vector<int>> seeds;
    seeds.push_back({});
    for (int a = 0; a < n; ++a) {
        seeds.push_back({a});
        for (int b = a + 1; b < n; ++b) {
            seeds.push_back({a, b});
            for (int c = b + 1; c < n; ++c) seeds.push_back({a, b, c});
        }
    }
    for (const auto& s : seeds) all.insert(subgroup_closure(g, s).elements);
    std::set<std::vector<int>> reps_seen;
    std::vector<std::vector<int>> reps;
    for (const auto& sub : all) {
        std::vector<int> least;
        for (int q = 0; q < n; ++q) {
            std::vector<int> conj;
            conj.reserve(sub.size());
            for (int x : sub) conj.push_back(g->mul(g->mul(q, x), g->inv(q)));
            std::sort(conj.begin(), conj.end());
            if (least.empty() || conj < least) least = std::move(conj);
        }
        if (reps_seen.insert(least).second) reps.push_back(least);
    }
    std::sort(reps.begin(), reps.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    return reps;
}

inline CatalogEntry catalog_base(const std::string& name);

inline GroupPtr catalog_group(const std::string& name) {
    // Direct products: "AxB" with A, B base catalog names.
    size_t pos = name.find('x');
    if (pos != std::string::npos) {
        GroupPtr left = catalog_group(name.substr(0, pos));
        GroupPtr right = catalog_group(name.substr(pos + 1));
        return direct_product(left, right);
    }
    return catalog_base(name).group;
}

inline CatalogEntry catalog_base(const std::string& name) {
    CatalogEntry e;
    auto parse_arg = [&name](const std::string& prefix) -> int {
        std::string inner = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
        return std::stoi(inner);
    };
    if (name.rfind("cyclic(", 0) == 0 && name.back() == ')') {
        int n = parse_arg("cyclic");
        e.group = cyclic_group(n);
        for (int d = 1; d <= n; ++d) {
            if (n % d) continue;
            std::vector<int> sub;
            for (int j = 0; j < d; ++j) sub.push_back(j * (n / d));
            std::sort(sub.begin(), sub.end());
            e.subgroups["order" + std::to_string(d)] = sub;
        }
    } else if (name.rfind("dihedral(", 0) == 0 && name.back() == ')') {
        int n = parse_arg("dihedral");
        e.group = dihedral_group(n);
        std::vector<int> rot;
        for (int a = 0; a < n; ++a) rot.push_back(a);
        e.subgroups["rotations"] = rot;
        e.subgroups["reflection"] = {0, n};  // {e, s}
    } else if (name.rfind("symmetric(", 0) == 0 && name.back() == ')') {
        int n = parse_arg("symmetric");
        e.group = symmetric_group(n);
        if (n == 3) {
            e.subgroups["alternating"] = {0, 3, 4};
            e.subgroups["transposition"] = {0, 2};  // {e, (01)}
        } else if (n == 4) {
            // Indices in lex one-line order of S4.
            std::vector<int> a4, s3, v4;
            {
                // Recompute from permutation parity / support to stay honest
                // about the lex indexing.
                std::vector<Perm> elems;
                Perm p{0, 1, 2, 3};
                do {
                    elems.push_back(p);
                } while (std::next_permutation(p.begin(), p.end()));
                for (size_t i = 0; i < elems.size(); ++i) {
                    const Perm& q = elems[i];
                    int invs = 0;
                    for (size_t x = 0; x < q.size(); ++x)
                        for (size_t y = x + 1; y < q.size(); ++y)
                            if (q[x] > q[y]) ++invs;
                    bool even = invs % 2 == 0;
                    if (even) a4.push_back(static_cast<int>(i));
                    if (q[3] == 3) s3.push_back(static_cast<int>(i));
                    bool fixfree_or_id = true;  // id or product of two disjoint 2-cycles
                    int moved = 0;
                    for (size_t x = 0; x < q.size(); ++x)
                        if (q[x] != static_cast<int>(x)) ++moved;
                    bool involution = true;
                    for (size_t x = 0; x < q.size(); ++x)
                        if (q[static_cast<size_t>(q[x])] != static_cast<int>(x)) involution = false;
                    fixfree_or_id = (moved == 0) || (moved == 4 && involution);
                    if (fixfree_or_id && even) v4.push_back(static_cast<int>(i));
                }
            }
            e.subgroups["alternating"] = a4;
            e.subgroups["point_stabilizer"] = s3;
            e.subgroups["klein_normal"] = v4;
        }
    } else if (name == "klein4") {
        // Z2 x Z2 table with elements (a,b) encoded as 2a+b.
        std::vector<std::vector<int>> t(4, std::vector<int>(4));
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y)
                t[static_cast<size_t>(x)][static_cast<size_t>(y)] = x ^ y;
        e.group = group_from_table(std::move(t), "klein4");
    } else if (name == "quaternion8") {
        e.group = quaternion_group();
        e.subgroups["i_subgroup"] = {0, 1, 2, 3};  // {1,-1,i,-i}
    } else {
        throw std::invalid_argument("unknown catalog group: " + name);
    }
    return e;
}

}  // namespace detail

inline std::vector<std::string> catalog_names() {
    return {"cyclic(n)", "dihedral(n)", "klein4", "quaternion8", "symmetric(n<=4)",
            "products: <name>x<name>"};
}

inline CatalogEntry catalog(const std::string& name) {
    CatalogEntry e;
    if (name.find('x') != std::string::npos) {
        e.group = detail::catalog_group(name);
    } else {
        e = detail::catalog_base(name);
    }
    GroupPtr g = e.group;
    e.subgroups["trivial"] = {g->identity};
    std::vector<int> full(static_cast<size_t>(g->order));
    for (int i = 0; i < g->order; ++i) full[static_cast<size_t>(i)] = i;
    e.subgroups["full"] = full;
    e.subgroups["center"] = center(g).elements;
    e.subgroups["derived"] = derived_subgroup(g).elements;
    if (g->order <= 12) {
        auto reps = detail::subgroup_conjugacy_reps(g);
        std::map<int, int> per_order_count;
        for (const auto& r : reps) {
            int idx = per_order_count[static_cast<int>(r.size())]++;
            e.subgroups["cc_o" + std::to_string(r.size()) + "_" + std::to_string(idx)] = r;
        }
    }
    for (auto& [k, v] : e.subgroups) {
        (void)k;
        std::sort(v.begin(), v.end());
    }
    return e;
}

}  // namespace qhg
