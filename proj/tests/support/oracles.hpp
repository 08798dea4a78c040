#pragma once

// Test-only brute-force oracles, independent of the library's search
// machinery. Everything here works on raw tables.

#include <cstdint>
#include <functional>
#include <vector>

namespace oracles {

using Table = std::vector<std::vector<std::uint16_t>>;

inline bool table_associative(const Table& t) {
    const std::size_t n = t.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
    return true;
}

/// Every group table on n points with identity 0: fills a Latin square cell by
/// cell, keeps the associative ones.
inline void for_each_group_table(std::size_t n, const std::function<void(const Table&)>& fn) {
    Table t(n, std::vector<std::uint16_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        t[0][i] = static_cast<std::uint16_t>(i);
        t[i][0] = static_cast<std::uint16_t>(i);
    }
    if (n <= 1) {
        fn(t);
        return;
    }
    std::vector<std::vector<char>> row_used(n, std::vector<char>(n, 0)),
        col_used(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        row_used[i][i] = 1;  // from column 0: t[i][0] = i
        col_used[i][i] = 1;  // from row 0:    t[0][i] = i
    }
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t r, std::size_t c) {
        if (r == n) {
            if (table_associative(t)) fn(t);
            return;
        }
        const std::size_t nr = (c + 1 == n) ? r + 1 : r;
        const std::size_t nc = (c + 1 == n) ? 1 : c + 1;
        for (std::uint16_t v = 0; v < n; ++v) {
            if (row_used[r][v] || col_used[c][v]) continue;
            t[r][c] = v;
            row_used[r][v] = col_used[c][v] = 1;
            rec(nr, nc);
            row_used[r][v] = col_used[c][v] = 0;
        }
    };
    rec(1, 1);
}

/// Whether (dot, circ) satisfies a o (b . c) = (a o b) . a^-1 . (a o c) with
/// inverses in dot.
inline bool tables_satisfy_brace_identity(const Table& dot, const Table& circ) {
    const std::size_t n = dot.size();
    std::vector<std::uint16_t> inv(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (dot[a][b] == 0) inv[a] = static_cast<std::uint16_t>(b);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (circ[a][dot[b][c]] != dot[dot[circ[a][b]][inv[a]]][circ[a][c]]) return false;
    return true;
}

/// Number of group tables circ (identity 0) with (dot, circ) a skew brace.
inline std::size_t brute_force_brace_count(const Table& dot) {
    std::size_t count = 0;
    for_each_group_table(dot.size(), [&](const Table& circ) {
        if (tables_satisfy_brace_identity(dot, circ)) ++count;
    });
    return count;
}

}  // namespace oracles
