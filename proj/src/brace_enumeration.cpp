#include "bracekit/brace_enumeration.hpp"

#include "bracekit/error.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace bracekit {

namespace {

struct SearchTables {
    const FiniteGroup& g;
    std::size_t n;
    std::size_t naut;
    std::vector<Elem> apply;          // naut x n: apply[i*n + x] = auts[i](x)
    std::vector<std::uint16_t> comp;  // naut x naut: comp[i*naut + j] = index of auts[i] o auts[j]

    explicit SearchTables(const FiniteGroup& additive) : g(additive), n(additive.order()) {
        const auto auts = automorphisms(g);
        naut = auts.size();
        if (naut > 5000)
            throw Error("OrderBoundExceeded",
                        "automorphism group too large for regular-subgroup search (" +
                            std::to_string(naut) + ")");
        apply.resize(naut * n);
        for (std::size_t i = 0; i < naut; ++i)
            for (std::size_t x = 0; x < n; ++x) apply[i * n + x] = auts[i].map[x];
        // identity is index 0 (lexicographically minimal map)
        std::vector<std::vector<Elem>> sorted_maps(naut);
        for (std::size_t i = 0; i < naut; ++i) sorted_maps[i] = auts[i].map;
        comp.resize(naut * naut);
        std::vector<Elem> buf(n);
        for (std::size_t i = 0; i < naut; ++i)
            for (std::size_t j = 0; j < naut; ++j) {
                for (std::size_t x = 0; x < n; ++x) buf[x] = apply[i * n + apply[j * n + x]];
                const auto it = std::lower_bound(sorted_maps.begin(), sorted_maps.end(), buf);
                comp[i * naut + j] = static_cast<std::uint16_t>(it - sorted_maps.begin());
            }
    }
};

// Partial assignment of automorphisms to translations. Covered translations
// always form a subgroup of the holomorph with pairwise distinct translations.
struct State {
    std::vector<std::int32_t> phi;  // -1 = uncovered
    std::vector<Elem> covered;      // in discovery order

    explicit State(std::size_t n) : phi(n, -1) {
        phi[0] = 0;
        covered.push_back(0);
    }
};

// Adds (t, cand) and closes under products. False on conflict (same
// translation, different automorphism) or when the closure size cannot divide
// the group order.
bool close(State& st, Elem t, std::uint16_t cand, const SearchTables& tab) {
    st.phi[t] = cand;
    st.covered.push_back(t);
    std::size_t next = st.covered.size() - 1;  // first unprocessed element
    while (next < st.covered.size()) {
        const Elem x = st.covered[next++];
        const std::uint32_t px = static_cast<std::uint32_t>(st.phi[x]);
        for (std::size_t i = 0; i < st.covered.size(); ++i) {
            const Elem y = st.covered[i];
            const std::uint32_t py = static_cast<std::uint32_t>(st.phi[y]);
            // (x, px)(y, py)
            Elem z = tab.g.mul(x, tab.apply[px * tab.n + y]);
            std::uint16_t k = tab.comp[px * tab.naut + py];
            if (st.phi[z] < 0) {
                st.phi[z] = k;
                st.covered.push_back(z);
            } else if (st.phi[z] != k) {
                return false;
            }
            // (y, py)(x, px)
            z = tab.g.mul(y, tab.apply[py * tab.n + x]);
            k = tab.comp[py * tab.naut + px];
            if (st.phi[z] < 0) {
                st.phi[z] = k;
                st.covered.push_back(z);
            } else if (st.phi[z] != k) {
                return false;
            }
        }
    }
    return tab.n % st.covered.size() == 0;
}

void emit(const State& st, const SearchTables& tab,
          const std::function<void(const FiniteSkewBrace&)>& visit) {
    std::vector<std::vector<Elem>> rows(tab.n, std::vector<Elem>(tab.n));
    for (std::size_t a = 0; a < tab.n; ++a) {
        const std::uint32_t pa = static_cast<std::uint32_t>(st.phi[a]);
        for (std::size_t b = 0; b < tab.n; ++b)
            rows[a][b] = tab.g.mul(static_cast<Elem>(a), tab.apply[pa * tab.n + b]);
    }
    visit(FiniteSkewBrace::verify_brace(tab.g, FiniteGroup::check_group(rows)));
}

void dfs(const State& st, const SearchTables& tab,
         const std::function<void(const FiniteSkewBrace&)>& visit) {
    if (st.covered.size() == tab.n) {
        emit(st, tab, visit);
        return;
    }
    Elem t = 0;
    while (st.phi[t] >= 0) ++t;
    for (std::uint16_t cand = 0; cand < tab.naut; ++cand) {
        State child = st;
        if (close(child, t, cand, tab)) dfs(child, tab, visit);
    }
}

}  // namespace

void enumerate_braces_visit(const FiniteGroup& additive,
                            const std::function<void(const FiniteSkewBrace&)>& visit,
                            std::size_t order_bound) {
    if (additive.order() > order_bound)
        throw Error("OrderBoundExceeded", "order " + std::to_string(additive.order()) +
                                              " exceeds bound " + std::to_string(order_bound));
    SearchTables tab(additive);
    if (tab.n == 1) {
        emit(State(1), tab, visit);
        return;
    }
    dfs(State(tab.n), tab, visit);
}

std::vector<FiniteSkewBrace> enumerate_braces(const FiniteGroup& additive, std::size_t order_bound) {
    std::vector<FiniteSkewBrace> out;
    enumerate_braces_visit(
        additive, [&](const FiniteSkewBrace& b) { out.push_back(b); }, order_bound);
    std::sort(out.begin(), out.end(), [](const FiniteSkewBrace& a, const FiniteSkewBrace& b) {
        return a.circ().flat_table() < b.circ().flat_table();
    });
    return out;
}

std::size_t count_braces(const FiniteGroup& additive, std::size_t order_bound) {
    std::size_t count = 0;
    enumerate_braces_visit(
        additive, [&](const FiniteSkewBrace&) { ++count; }, order_bound);
    return count;
}

}  // namespace bracekit
