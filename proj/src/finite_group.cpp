#include "bracekit/finite_group.hpp"

#include "bracekit/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace bracekit {

namespace {

std::string cell(std::size_t a, std::size_t b) {
    std::ostringstream os;
    os << "(" << a << "," << b << ")";
    return os.str();
}

}  // namespace

FiniteGroup FiniteGroup::check_group(const std::vector<std::vector<Elem>>& table) {
    const std::size_t n = table.size();
    if (n == 0) throw Error("BadTable", "empty table");
    if (n > 0xffff) throw Error("BadTable", "order too large");
    for (std::size_t r = 0; r < n; ++r) {
        if (table[r].size() != n) throw Error("BadTable", "table is not square at row " + std::to_string(r));
        for (std::size_t c = 0; c < n; ++c)
            if (table[r][c] >= n)
                throw Error("BadTable", "entry out of range at " + cell(r, c));
    }
    for (std::size_t h = 0; h < n; ++h) {
        if (table[0][h] != h)
            throw Error("NoIdentity", "table[0][" + std::to_string(h) + "] != " + std::to_string(h) +
                                           "; element 0 must be the identity");
        if (table[h][0] != h)
            throw Error("NoIdentity", "table[" + std::to_string(h) + "][0] != " + std::to_string(h) +
                                           "; element 0 must be the identity");
    }
    // Latin square: every row and column is a permutation.
    std::vector<char> seen(n);
    for (std::size_t r = 0; r < n; ++r) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t c = 0; c < n; ++c) {
            if (seen[table[r][c]])
                throw Error("NotLatin", "row " + std::to_string(r) + " repeats value " +
                                            std::to_string(table[r][c]) + " at " + cell(r, c));
            seen[table[r][c]] = 1;
        }
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t r = 0; r < n; ++r) {
            if (seen[table[r][c]])
                throw Error("NotLatin", "column " + std::to_string(c) + " repeats value " +
                                            std::to_string(table[r][c]) + " at " + cell(r, c));
            seen[table[r][c]] = 1;
        }
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw Error("NotAssociative", "triple (" + std::to_string(a) + "," +
                                                      std::to_string(b) + "," + std::to_string(c) + ")");
    FiniteGroup g;
    g.n_ = n;
    g.table_.reserve(n * n);
    for (const auto& row : table) g.table_.insert(g.table_.end(), row.begin(), row.end());
    g.inverse_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (g.table_[a * n + b] == 0) g.inverse_[a] = static_cast<Elem>(b);
    return g;
}

std::size_t FiniteGroup::element_order(Elem a) const {
    std::size_t k = 1;
    Elem x = a;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = a + 1; b < n_; ++b)
            if (mul(static_cast<Elem>(a), static_cast<Elem>(b)) !=
                mul(static_cast<Elem>(b), static_cast<Elem>(a)))
                return false;
    return true;
}

std::vector<std::vector<Elem>> FiniteGroup::table_rows() const {
    std::vector<std::vector<Elem>> rows(n_);
    for (std::size_t r = 0; r < n_; ++r)
        rows[r].assign(table_.begin() + static_cast<std::ptrdiff_t>(r * n_),
                       table_.begin() + static_cast<std::ptrdiff_t>((r + 1) * n_));
    return rows;
}

FiniteGroup FiniteGroup::opposite() const {
    std::vector<std::vector<Elem>> rows(n_, std::vector<Elem>(n_));
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b)
            rows[a][b] = mul(static_cast<Elem>(b), static_cast<Elem>(a));
    return check_group(rows);
}

ElemSet generated_subgroup(const FiniteGroup& g, const ElemSet& gens) {
    const std::size_t n = g.order();
    std::vector<char> in(n, 0);
    std::vector<Elem> elems;
    auto add = [&](Elem e) {
        if (!in[e]) {
            in[e] = 1;
            elems.push_back(e);
        }
    };
    add(0);
    for (Elem e : gens) {
        if (e >= n) throw Error("BadElement", "element index " + std::to_string(e) + " out of range");
        add(e);
    }
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            add(g.mul(elems[i], elems[j]));
            add(g.mul(elems[j], elems[i]));
        }
    std::sort(elems.begin(), elems.end());
    return elems;
}

bool is_subgroup(const FiniteGroup& g, const ElemSet& s) {
    if (s.empty() || s.front() != 0) return false;
    std::vector<char> in(g.order(), 0);
    for (Elem e : s) in[e] = 1;
    for (Elem a : s)
        for (Elem b : s)
            if (!in[g.mul(a, b)]) return false;
    return true;
}

bool is_normal(const FiniteGroup& g, const ElemSet& s) {
    std::vector<char> in(g.order(), 0);
    for (Elem e : s) in[e] = 1;
    for (std::size_t x = 0; x < g.order(); ++x)
        for (Elem e : s)
            if (!in[g.conj(static_cast<Elem>(x), e)]) return false;
    return true;
}

ElemSet normal_closure(const FiniteGroup& g, const ElemSet& gens) {
    ElemSet conjugates;
    for (std::size_t x = 0; x < g.order(); ++x)
        for (Elem e : gens) conjugates.push_back(g.conj(static_cast<Elem>(x), e));
    std::sort(conjugates.begin(), conjugates.end());
    conjugates.erase(std::unique(conjugates.begin(), conjugates.end()), conjugates.end());
    return generated_subgroup(g, conjugates);
}

ElemSet commutator_subgroup(const FiniteGroup& g, const ElemSet& a, const ElemSet& b) {
    ElemSet comms;
    for (Elem x : a)
        for (Elem y : b)
            comms.push_back(g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y))));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return generated_subgroup(g, comms);
}

std::vector<ElemSet> derived_series(const FiniteGroup& g) {
    std::vector<ElemSet> chain;
    ElemSet current(g.order());
    std::iota(current.begin(), current.end(), 0);
    chain.push_back(current);
    while (true) {
        ElemSet next = commutator_subgroup(g, current, current);
        if (next == current) break;
        chain.push_back(next);
        current = next;
        if (current.size() == 1) break;
    }
    return chain;
}

bool is_solvable(const FiniteGroup& g) { return derived_series(g).back().size() == 1; }

bool is_abstractly_simple(const FiniteGroup& g) {
    if (g.order() == 1) return false;
    for (Elem e = 1; e < g.order(); ++e)
        if (normal_closure(g, {e}).size() != g.order()) return false;
    return true;
}

ElemSet center(const FiniteGroup& g) {
    ElemSet z;
    for (std::size_t a = 0; a < g.order(); ++a) {
        bool central = true;
        for (std::size_t b = 0; b < g.order(); ++b)
            if (g.mul(static_cast<Elem>(a), static_cast<Elem>(b)) !=
                g.mul(static_cast<Elem>(b), static_cast<Elem>(a))) {
                central = false;
                break;
            }
        if (central) z.push_back(static_cast<Elem>(a));
    }
    return z;
}

std::vector<ElemSet> all_subgroups(const FiniteGroup& g) {
    std::set<ElemSet> known;
    known.insert(ElemSet{0});
    std::vector<ElemSet> queue{ElemSet{0}};
    while (!queue.empty()) {
        ElemSet h = std::move(queue.back());
        queue.pop_back();
        std::vector<char> in(g.order(), 0);
        for (Elem e : h) in[e] = 1;
        for (Elem x = 1; x < g.order(); ++x) {
            if (in[x]) continue;
            ElemSet gens = h;
            gens.push_back(x);
            ElemSet k = generated_subgroup(g, gens);
            if (known.insert(k).second) queue.push_back(k);
        }
    }
    std::vector<ElemSet> out(known.begin(), known.end());
    std::sort(out.begin(), out.end(), [](const ElemSet& a, const ElemSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

bool is_characteristic(const FiniteGroup& g, const ElemSet& s, const std::vector<GroupHom>& auts) {
    std::vector<char> in(g.order(), 0);
    for (Elem e : s) in[e] = 1;
    for (const auto& phi : auts)
        for (Elem e : s)
            if (!in[phi(e)]) return false;
    return true;
}

ElemSet greedy_generators(const FiniteGroup& g) {
    ElemSet gens;
    ElemSet h{0};
    std::vector<char> in(g.order(), 0);
    in[0] = 1;
    for (Elem e = 1; e < g.order() && h.size() < g.order(); ++e) {
        if (in[e]) continue;
        gens.push_back(e);
        h = generated_subgroup(g, gens);
        std::fill(in.begin(), in.end(), 0);
        for (Elem x : h) in[x] = 1;
    }
    return gens;
}

namespace {

// Backtracking over generator images: enumerates bijective homomorphisms
// a -> b extending images of a greedy generating set of `a`. Calls on_found
// for each; stops early when it returns true. Candidate images are screened
// by element order; partial maps are closed under products with conflict and
// injectivity pruning.
struct IsoSearch {
    const FiniteGroup& a;
    const FiniteGroup& b;
    ElemSet gens;
    std::vector<std::vector<Elem>> candidates;  // per generator, same order
    const std::function<bool(const std::vector<Elem>&)>& on_found;
    bool stopped = false;

    IsoSearch(const FiniteGroup& a_, const FiniteGroup& b_,
              const std::function<bool(const std::vector<Elem>&)>& cb)
        : a(a_), b(b_), on_found(cb) {
        gens = greedy_generators(a);
        std::vector<std::size_t> b_order(b.order());
        for (std::size_t e = 0; e < b.order(); ++e) b_order[e] = b.element_order(static_cast<Elem>(e));
        for (Elem gen : gens) {
            const std::size_t want = a.element_order(gen);
            std::vector<Elem> c;
            for (std::size_t e = 0; e < b.order(); ++e)
                if (b_order[e] == want) c.push_back(static_cast<Elem>(e));
            candidates.push_back(std::move(c));
        }
    }

    // img: partial map a->b (-1 undefined); dom: elements with defined images,
    // closed under products; used: image hit flags.
    void extend(std::size_t k, std::vector<int>& img, std::vector<Elem>& dom,
                std::vector<char>& used) {
        if (stopped) return;
        if (k == gens.size()) {
            if (dom.size() != a.order()) return;
            std::vector<Elem> map(a.order());
            for (std::size_t i = 0; i < a.order(); ++i) map[i] = static_cast<Elem>(img[i]);
            if (on_found(map)) stopped = true;
            return;
        }
        const Elem gen = gens[k];
        for (Elem c : candidates[k]) {
            if (used[c]) continue;
            std::vector<int> img2 = img;
            std::vector<Elem> dom2 = dom;
            std::vector<char> used2 = used;
            img2[gen] = c;
            used2[c] = 1;
            dom2.push_back(gen);
            // worklist closure: pairs among the old elements are closed
            // already, so process each new element against everything
            bool ok = true;
            std::size_t next = dom2.size() - 1;
            while (ok && next < dom2.size()) {
                const Elem x = dom2[next++];
                for (std::size_t j = 0; j < dom2.size() && ok; ++j) {
                    const Elem y = dom2[j];
                    for (int swap = 0; swap < 2 && ok; ++swap) {
                        const Elem p = swap ? a.mul(y, x) : a.mul(x, y);
                        const Elem q = swap ? b.mul(static_cast<Elem>(img2[y]),
                                                    static_cast<Elem>(img2[x]))
                                            : b.mul(static_cast<Elem>(img2[x]),
                                                    static_cast<Elem>(img2[y]));
                        if (img2[p] == -1) {
                            if (used2[q]) {
                                ok = false;
                                break;
                            }
                            img2[p] = q;
                            used2[q] = 1;
                            dom2.push_back(p);
                        } else if (img2[p] != q) {
                            ok = false;
                        }
                    }
                }
            }
            if (ok) extend(k + 1, img2, dom2, used2);
            if (stopped) return;
        }
    }

    void run() {
        if (a.order() != b.order()) return;
        std::vector<int> img(a.order(), -1);
        img[0] = 0;
        std::vector<Elem> dom{0};
        std::vector<char> used(b.order(), 0);
        used[0] = 1;
        extend(0, img, dom, used);
    }
};

}  // namespace

std::vector<GroupHom> automorphisms(const FiniteGroup& g) {
    std::vector<GroupHom> out;
    std::function<bool(const std::vector<Elem>&)> collect = [&](const std::vector<Elem>& map) {
        out.push_back(GroupHom{map});
        return false;
    };
    IsoSearch search(g, g, collect);
    search.run();
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::multiset<std::size_t> order_profile(const FiniteGroup& g) {
    std::multiset<std::size_t> p;
    for (std::size_t e = 0; e < g.order(); ++e) p.insert(g.element_order(static_cast<Elem>(e)));
    return p;
}

}  // namespace

bool isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order() != b.order()) return false;
    if (a.is_abelian() != b.is_abelian()) return false;
    if (center(a).size() != center(b).size()) return false;
    if (order_profile(a) != order_profile(b)) return false;
    auto da = derived_series(a), db = derived_series(b);
    if (da.size() != db.size()) return false;
    for (std::size_t i = 0; i < da.size(); ++i)
        if (da[i].size() != db[i].size()) return false;

    bool found = false;
    std::function<bool(const std::vector<Elem>&)> first = [&](const std::vector<Elem>&) {
        found = true;
        return true;
    };
    IsoSearch search(a, b, first);
    search.run();
    return found;
}

FiniteGroup holomorph(const FiniteGroup& g) {
    const auto auts = automorphisms(g);
    const std::size_t n = g.order(), a = auts.size(), m = n * a;
    if (m > 0xffff) throw Error("BadTable", "holomorph order exceeds element type");
    // The identity map is lexicographically minimal, so it sits at index 0 and
    // (0, id) lands at holomorph element 0.
    std::map<std::vector<Elem>, std::uint32_t> index_of;
    for (std::size_t i = 0; i < a; ++i) index_of[auts[i].map] = static_cast<std::uint32_t>(i);
    std::vector<std::uint32_t> comp(a * a);
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < a; ++j) {
            std::vector<Elem> c(n);
            for (std::size_t x = 0; x < n; ++x) c[x] = auts[i](auts[j](static_cast<Elem>(x)));
            comp[i * a + j] = index_of.at(c);
        }
    std::vector<std::vector<Elem>> rows(m, std::vector<Elem>(m));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t i = 0; i < a; ++i)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t j = 0; j < a; ++j) {
                    const std::size_t lhs = x * a + i, rhs = y * a + j;
                    const Elem t = g.mul(static_cast<Elem>(x), auts[i](static_cast<Elem>(y)));
                    rows[lhs][rhs] = static_cast<Elem>(t * a + comp[i * a + j]);
                }
    return FiniteGroup::check_group(rows);
}

// Constructions ---------------------------------------------------------------

FiniteGroup cyclic_group(std::size_t n) {
    std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = static_cast<Elem>((i + j) % n);
    return FiniteGroup::check_group(rows);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const std::size_t na = a.order(), nb = b.order(), n = na * nb;
    std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Elem xa = static_cast<Elem>(i / nb), xb = static_cast<Elem>(i % nb);
            const Elem ya = static_cast<Elem>(j / nb), yb = static_cast<Elem>(j % nb);
            rows[i][j] = static_cast<Elem>(a.mul(xa, ya) * nb + b.mul(xb, yb));
        }
    return FiniteGroup::check_group(rows);
}

namespace {

FiniteGroup permutation_group(std::vector<std::vector<Elem>> perms) {
    std::sort(perms.begin(), perms.end());
    std::map<std::vector<Elem>, Elem> index_of;
    for (std::size_t i = 0; i < perms.size(); ++i) index_of[perms[i]] = static_cast<Elem>(i);
    const std::size_t n = perms.size();
    std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Elem> c(perms[i].size());
            for (std::size_t x = 0; x < c.size(); ++x) c[x] = perms[i][perms[j][x]];
            rows[i][j] = index_of.at(c);
        }
    return FiniteGroup::check_group(rows);
}

bool perm_even(const std::vector<Elem>& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0;
}

std::vector<std::vector<Elem>> all_perms(std::size_t n) {
    std::vector<Elem> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<Elem>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

FiniteGroup symmetric_group(std::size_t n) {
    if (n > 5) throw Error("BadTable", "symmetric_group supports n <= 5");
    return permutation_group(all_perms(n));
}

FiniteGroup alternating_group(std::size_t n) {
    if (n > 5) throw Error("BadTable", "alternating_group supports n <= 5");
    std::vector<std::vector<Elem>> evens;
    for (auto& p : all_perms(n))
        if (perm_even(p)) evens.push_back(p);
    return permutation_group(evens);
}

FiniteGroup dihedral_group(std::size_t n) {
    const std::size_t m = 2 * n;
    std::vector<std::vector<Elem>> rows(m, std::vector<Elem>(m));
    for (std::size_t j1 = 0; j1 < 2; ++j1)
        for (std::size_t i1 = 0; i1 < n; ++i1)
            for (std::size_t j2 = 0; j2 < 2; ++j2)
                for (std::size_t i2 = 0; i2 < n; ++i2) {
                    const std::size_t i = (i1 + (j1 ? n - i2 : i2)) % n;
                    const std::size_t j = j1 ^ j2;
                    rows[j1 * n + i1][j2 * n + i2] = static_cast<Elem>(j * n + i);
                }
    return FiniteGroup::check_group(rows);
}

FiniteGroup quaternion_group() {
    // index = axis*2 + sign with axis 0 => 1, 1 => i, 2 => j, 3 => k
    auto mul = [](int e1, int e2) {
        const int a1 = e1 / 2, s1 = e1 % 2, a2 = e2 / 2, s2 = e2 % 2;
        int axis, sign = s1 ^ s2;
        if (a1 == 0) {
            axis = a2;
        } else if (a2 == 0) {
            axis = a1;
        } else if (a1 == a2) {
            axis = 0;
            sign ^= 1;
        } else {
            axis = 6 - a1 - a2;
            const bool cyclic = (a1 == 1 && a2 == 2) || (a1 == 2 && a2 == 3) || (a1 == 3 && a2 == 1);
            if (!cyclic) sign ^= 1;
        }
        return axis * 2 + sign;
    };
    std::vector<std::vector<Elem>> rows(8, std::vector<Elem>(8));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) rows[i][j] = static_cast<Elem>(mul(i, j));
    return FiniteGroup::check_group(rows);
}

namespace {

// Invariant-factor name for an abelian group, e.g. "C2xC2xC6".
std::string abelian_name(const FiniteGroup& g) {
    const std::size_t n = g.order();
    if (n == 1) return "C1";
    std::vector<std::size_t> orders(n);
    for (std::size_t e = 0; e < n; ++e) orders[e] = g.element_order(static_cast<Elem>(e));
    std::map<std::size_t, std::vector<std::size_t>> primary;  // p -> type, descending
    std::size_t m = n;
    for (std::size_t p = 2; m > 1; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        // s_k = log_p #{x : order(x) divides p^k}; #parts >= k is s_k - s_{k-1}
        std::vector<std::size_t> s{0};
        std::size_t pk = 1;
        while (true) {
            pk *= p;
            std::size_t count = 0;
            for (std::size_t e = 0; e < n; ++e)
                if (pk % orders[e] == 0) ++count;
            std::size_t sk = 0;
            while (count > 1) {
                count /= p;
                ++sk;
            }
            if (sk == s.back()) break;
            s.push_back(sk);
        }
        std::vector<std::size_t> parts;
        for (std::size_t k = 1; k < s.size(); ++k) {
            const std::size_t at_least_k = s[k] - s[k - 1];
            if (parts.size() < at_least_k) parts.resize(at_least_k, 0);
            for (std::size_t i = 0; i < at_least_k; ++i) parts[i] = k;
        }
        std::sort(parts.rbegin(), parts.rend());
        primary[p] = parts;
    }
    std::size_t max_parts = 0;
    for (auto& [p, parts] : primary) max_parts = std::max(max_parts, parts.size());
    std::vector<std::size_t> factors(max_parts, 1);  // descending invariant factors
    for (auto& [p, parts] : primary)
        for (std::size_t i = 0; i < parts.size(); ++i) {
            std::size_t pe = 1;
            for (std::size_t t = 0; t < parts[i]; ++t) pe *= p;
            factors[i] *= pe;
        }
    std::sort(factors.begin(), factors.end());
    std::string name;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) name += "x";
        name += "C" + std::to_string(factors[i]);
    }
    return name;
}

}  // namespace

std::string identify_group(const FiniteGroup& g) {
    if (g.is_abelian()) return abelian_name(g);
    const std::size_t n = g.order();
    struct Probe {
        std::string name;
        std::function<FiniteGroup()> make;
    };
    std::vector<Probe> probes;
    if (n == 6) probes.push_back({"S3", [] { return symmetric_group(3); }});
    if (n == 24) probes.push_back({"S4", [] { return symmetric_group(4); }});
    if (n == 120) probes.push_back({"S5", [] { return symmetric_group(5); }});
    if (n == 12) probes.push_back({"A4", [] { return alternating_group(4); }});
    if (n == 60) probes.push_back({"A5", [] { return alternating_group(5); }});
    if (n == 8) probes.push_back({"Q8", [] { return quaternion_group(); }});
    if (n % 2 == 0 && n >= 6)
        probes.push_back({"D" + std::to_string(n / 2), [n] { return dihedral_group(n / 2); }});
    for (const auto& probe : probes)
        if (isomorphic(g, probe.make())) return probe.name;
    return "unrecognized_order_" + std::to_string(n);
}

}  // namespace bracekit
