#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bracekit/error.hpp"
#include "bracekit/finite_group.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

using namespace bracekit;

namespace {

// Independent oracle: count automorphisms of g by scanning every permutation
// of the element set that fixes 0.
std::size_t count_automorphisms_brute(const FiniteGroup& g) {
    std::vector<Elem> p(g.order());
    std::iota(p.begin(), p.end(), 0);
    std::size_t count = 0;
    do {
        if (p[0] != 0) continue;
        bool hom = true;
        for (Elem a = 0; a < g.order() && hom; ++a)
            for (Elem b = 0; b < g.order(); ++b)
                if (p[g.mul(a, b)] != g.mul(p[a], p[b])) {
                    hom = false;
                    break;
                }
        if (hom) ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

bool associative(const std::vector<std::vector<Elem>>& t) {
    const std::size_t n = t.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
    return true;
}

// Finds some non-associative loop (Latin square with identity 0) of order n.
std::vector<std::vector<Elem>> find_nonassociative_loop(std::size_t n) {
    std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        t[0][i] = static_cast<Elem>(i);
        t[i][0] = static_cast<Elem>(i);
    }
    std::vector<std::vector<char>> col_used(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) col_used[i][i] = 1;
    std::vector<std::vector<char>> row_used(n, std::vector<char>(n, 0));
    for (std::size_t r = 1; r < n; ++r) row_used[r][t[r][0]] = 1;

    std::vector<std::vector<Elem>> result;
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t r, std::size_t c) -> bool {
        if (r == n) {
            if (!associative(t)) {
                result = t;
                return true;
            }
            return false;
        }
        const std::size_t nr = (c + 1 == n) ? r + 1 : r;
        const std::size_t nc = (c + 1 == n) ? 1 : c + 1;
        for (Elem v = 0; v < n; ++v) {
            if (row_used[r][v] || col_used[c][v]) continue;
            t[r][c] = v;
            row_used[r][v] = col_used[c][v] = 1;
            if (rec(nr, nc)) return true;
            row_used[r][v] = col_used[c][v] = 0;
        }
        return false;
    };
    REQUIRE(rec(1, 1));
    return result;
}

}  // namespace

TEST_CASE("check_group accepts C4 and builds inverses") {
    FiniteGroup c4 = cyclic_group(4);
    CHECK(c4.order() == 4);
    CHECK(c4.inv(1) == 3);
    CHECK(c4.mul(2, 3) == 1);
    CHECK(c4.element_order(1) == 4);
    CHECK(c4.element_order(2) == 2);
}

TEST_CASE("check_group rejects bad tables") {
    CHECK_THROWS_WITH_AS(FiniteGroup::check_group({{0, 1}, {1, 1}}), doctest::Contains("NotLatin"),
                         Error);
    CHECK_THROWS_WITH_AS(FiniteGroup::check_group({{1, 0}, {0, 1}}), doctest::Contains("NoIdentity"),
                         Error);
    auto bad = find_nonassociative_loop(5);
    CHECK_THROWS_WITH_AS(FiniteGroup::check_group(bad), doctest::Contains("NotAssociative"), Error);
}

TEST_CASE("automorphism counts") {
    CHECK(automorphisms(cyclic_group(3)).size() == 2);
    CHECK(automorphisms(direct_product(cyclic_group(2), cyclic_group(2))).size() == 6);
    FiniteGroup s3 = symmetric_group(3);
    auto auts = automorphisms(s3);
    CHECK(auts.size() == 6);
    CHECK(auts.size() == count_automorphisms_brute(s3));
    CHECK(count_automorphisms_brute(cyclic_group(6)) == automorphisms(cyclic_group(6)).size());
}

TEST_CASE("automorphisms are homomorphisms and form a group") {
    for (const FiniteGroup& g : {symmetric_group(3), cyclic_group(8), quaternion_group()}) {
        auto auts = automorphisms(g);
        for (const auto& phi : auts) {
            CHECK(phi(0) == 0);
            for (Elem a = 0; a < g.order(); ++a)
                for (Elem b = 0; b < g.order(); ++b)
                    REQUIRE(phi(g.mul(a, b)) == g.mul(phi(a), phi(b)));
        }
        auto find = [&](const std::vector<Elem>& m) {
            return std::find_if(auts.begin(), auts.end(),
                                [&](const GroupHom& h) { return h.map == m; }) != auts.end();
        };
        for (const auto& f : auts)
            for (const auto& h : auts) {
                std::vector<Elem> comp(g.order()), inv(g.order());
                for (Elem x = 0; x < g.order(); ++x) comp[x] = f(h(x));
                REQUIRE(find(comp));
                for (Elem x = 0; x < g.order(); ++x) inv[f(x)] = x;
                REQUIRE(find(inv));
            }
    }
}

TEST_CASE("holomorph") {
    FiniteGroup h2 = holomorph(cyclic_group(2));
    CHECK(h2.order() == 2);
    FiniteGroup h3 = holomorph(cyclic_group(3));
    CHECK(h3.order() == 6);
    CHECK_FALSE(h3.is_abelian());
    CHECK(isomorphic(h3, symmetric_group(3)));
    CHECK(holomorph(direct_product(cyclic_group(2), cyclic_group(2))).order() == 24);
}

TEST_CASE("subgroup tools") {
    FiniteGroup s3 = symmetric_group(3);
    auto series = derived_series(s3);
    REQUIRE(series.size() == 3);
    CHECK(series[0].size() == 6);
    CHECK(series[1].size() == 3);
    CHECK(series[2].size() == 1);
    CHECK(is_solvable(s3));

    CHECK(center(cyclic_group(4)) == ElemSet{0, 1, 2, 3});
    CHECK(center(s3).size() == 1);

    CHECK(is_abstractly_simple(alternating_group(5)));
    CHECK(is_abstractly_simple(cyclic_group(5)));
    CHECK_FALSE(is_abstractly_simple(s3));
    CHECK_FALSE(is_solvable(alternating_group(5)));

    // normal closure of a transposition in S3 is the whole group
    Elem transposition = 0;
    for (Elem e = 1; e < 6; ++e)
        if (s3.element_order(e) == 2) {
            transposition = e;
            break;
        }
    CHECK(normal_closure(s3, {transposition}).size() == 6);

    CHECK_THROWS_AS(generated_subgroup(s3, {42}), Error);
}

TEST_CASE("all_subgroups") {
    auto subs = all_subgroups(symmetric_group(3));
    CHECK(subs.size() == 6);  // e, three C2, A3, S3
    for (const auto& s : subs) CHECK(is_subgroup(symmetric_group(3), s));
    CHECK(all_subgroups(quaternion_group()).size() == 6);  // e, Z(Q8), three C4, Q8
}

TEST_CASE("isomorphic") {
    CHECK_FALSE(isomorphic(cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2))));
    FiniteGroup s3 = symmetric_group(3);
    CHECK(isomorphic(s3, s3));
    CHECK(isomorphic(s3, s3.opposite()));
    CHECK(isomorphic(dihedral_group(3), s3));
    CHECK_FALSE(isomorphic(dihedral_group(4), quaternion_group()));
    CHECK_FALSE(isomorphic(symmetric_group(4), direct_product(alternating_group(4), cyclic_group(2))));
}

TEST_CASE("identify_group") {
    CHECK(identify_group(cyclic_group(6)) == "C6");
    CHECK(identify_group(direct_product(cyclic_group(2), cyclic_group(4))) == "C2xC4");
    CHECK(identify_group(direct_product(
              cyclic_group(3),
              direct_product(cyclic_group(2), direct_product(cyclic_group(2), cyclic_group(2))))) ==
          "C2xC2xC6");
    CHECK(identify_group(symmetric_group(4)) == "S4");
    CHECK(identify_group(quaternion_group()) == "Q8");
    CHECK(identify_group(dihedral_group(6)) == "D6");
    CHECK(identify_group(alternating_group(5)) == "A5");
}

TEST_CASE("characteristic subgroups") {
    FiniteGroup s3 = symmetric_group(3);
    auto auts = automorphisms(s3);
    ElemSet a3 = derived_series(s3)[1];
    CHECK(is_characteristic(s3, a3, auts));
    ElemSet c2;
    for (Elem e = 1; e < 6; ++e)
        if (s3.element_order(e) == 2) {
            c2 = generated_subgroup(s3, {e});
            break;
        }
    CHECK_FALSE(is_characteristic(s3, c2, auts));
}
