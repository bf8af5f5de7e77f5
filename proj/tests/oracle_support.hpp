#pragma once

// Brute-force reference pipeline used to cross-check the search. Works on
// raw Table values and plain loops only, so the two code paths share no
// logic beyond the Table container itself.

#include <utility>
#include <vector>

#include "quandlekit/types.hpp"

namespace oracle {

using quandlekit::Table;

// Group axioms checked exhaustively on a complete candidate table.
inline bool table_is_abelian_group(const Table& t) {
    const int n = t.order();
    for (int i = 1; i <= n; ++i)
        if (t.at(1, i) != i || t.at(i, 1) != i) return false;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (t.at(i, j) != t.at(j, i)) return false;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                if (t.at(t.at(i, j), k) != t.at(i, t.at(j, k))) return false;
    return true;
}

namespace detail {

inline void fill_cells(Table& t, int i, int j, std::vector<Table>& out) {
    const int n = t.order();
    if (i > n) {
        if (table_is_abelian_group(t)) out.push_back(t);
        return;
    }
    const int next_i = j == n ? i + 1 : i;
    const int next_j = j == n ? 2 : j + 1;
    for (int v = 1; v <= n; ++v) {
        bool clash = false;
        for (int r = 1; r < i && !clash; ++r) clash = t.at(r, j) == v;
        for (int c = 1; c < j && !clash; ++c) clash = t.at(i, c) == v;
        if (clash) continue;
        t.at(i, j) = v;
        fill_cells(t, next_i, next_j, out);
    }
    t.at(i, j) = 0;
}

}  // namespace detail

// Every standard-form abelian group table of the given order, by direct
// backtracking over the interior cells with duplicate pruning only.
inline std::vector<Table> abelian_tables(int n) {
    Table t(n, 0);
    for (int i = 1; i <= n; ++i) {
        t.at(1, i) = i;
        t.at(i, 1) = i;
    }
    std::vector<Table> out;
    if (n == 1) {
        out.push_back(t);
        return out;
    }
    detail::fill_cells(t, 2, 2, out);
    return out;
}

inline int inverse_in(const Table& c, int a) {
    for (int m = 1; m <= c.order(); ++m)
        if (c.at(a, m) == 1) return m;
    return 0;
}

// phi as an image vector, phi[i-1] = image of i.
inline bool is_automorphism(const std::vector<int>& phi, const Table& c) {
    const int n = c.order();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (phi[static_cast<std::size_t>(c.at(i, j)) - 1] !=
                c.at(phi[static_cast<std::size_t>(i) - 1], phi[static_cast<std::size_t>(j) - 1]))
                return false;
    return true;
}

// phi(a) + b - phi(b), cell by cell.
inline bool reconstructs(const Table& q, const Table& c, const std::vector<int>& phi) {
    const int n = q.order();
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            const int pa = phi[static_cast<std::size_t>(a) - 1];
            const int pb = phi[static_cast<std::size_t>(b) - 1];
            if (q.at(a, b) != c.at(pa, c.at(b, inverse_in(c, pb)))) return false;
        }
    return true;
}

inline bool is_medial(const Table& q) {
    const int n = q.order();
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c)
                for (int d = 1; d <= n; ++d)
                    if (q.at(q.at(a, b), q.at(c, d)) != q.at(q.at(a, c), q.at(b, d)))
                        return false;
    return true;
}

// The full reference pipeline: the t-action is pinned to column 1, every
// abelian table is tried against it.
inline std::vector<std::pair<Table, std::vector<int>>> presentations(const Table& q) {
    std::vector<std::pair<Table, std::vector<int>>> out;
    if (!is_medial(q)) return out;
    const int n = q.order();
    std::vector<int> phi;
    phi.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) phi.push_back(q.at(i, 1));
    for (const Table& c : abelian_tables(n))
        if (is_automorphism(phi, c) && reconstructs(q, c, phi)) out.emplace_back(c, phi);
    return out;
}

}  // namespace oracle
