#include "quandlekit/quandle.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace quandlekit {

namespace {

std::string cell(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::optional<Violation> quandle_violation(const Table& t) {
    const int n = t.order();
    if (n < 1) return Violation{Violation::Rule::MalformedShape, {}, "empty table"};

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (!t.in_range(t.at(i, j)))
                return Violation{Violation::Rule::EntryOutOfRange,
                                 {i, j, t.at(i, j)},
                                 "entry " + cell(i, j) + " is " + std::to_string(t.at(i, j)) +
                                     ", outside {1.." + std::to_string(n) + "}"};

    // axiom (i)
    for (int i = 1; i <= n; ++i)
        if (t.at(i, i) != i)
            return Violation{Violation::Rule::Idempotency,
                             {i},
                             "idempotency fails: entry " + cell(i, i) + " is " +
                                 std::to_string(t.at(i, i)) + ", expected " + std::to_string(i)};

    // axiom (ii): each column is a permutation
    std::vector<int> seen(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j <= n; ++j) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int i = 1; i <= n; ++i) {
            const int v = t.at(i, j);
            if (seen[static_cast<std::size_t>(v)] != 0)
                return Violation{Violation::Rule::ColumnBijectivity,
                                 {j, seen[static_cast<std::size_t>(v)], i},
                                 "column " + std::to_string(j) + " repeats value " +
                                     std::to_string(v) + " at rows " +
                                     std::to_string(seen[static_cast<std::size_t>(v)]) + " and " +
                                     std::to_string(i)};
            seen[static_cast<std::size_t>(v)] = i;
        }
    }

    // axiom (iii)
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                if (t.at(t.at(i, j), k) != t.at(t.at(i, k), t.at(j, k)))
                    return Violation{Violation::Rule::RightSelfDistributivity,
                                     {i, j, k},
                                     "right self-distributivity fails at (i,j,k)=(" +
                                         std::to_string(i) + "," + std::to_string(j) + "," +
                                         std::to_string(k) + ")"};
    return std::nullopt;
}

}  // namespace

Checked<QuandleMatrix> validate_quandle(Table t) {
    if (auto v = quandle_violation(t)) return *v;
    return QuandleMatrix(std::move(t));
}

Checked<QuandleMatrix> validate_quandle(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    for (int i = 1; i <= n; ++i)
        if (static_cast<int>(rows[static_cast<std::size_t>(i - 1)].size()) != n)
            return Violation{Violation::Rule::MalformedShape,
                             {i},
                             "row " + std::to_string(i) + " has " +
                                 std::to_string(rows[static_cast<std::size_t>(i - 1)].size()) +
                                 " entries, expected " + std::to_string(n)};
    return validate_quandle(Table::from_rows(rows));
}

QuandleMatrix trivial_quandle(int n) {
    if (n < 1) throw std::invalid_argument("trivial_quandle: order must be positive");
    Table t(n, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) t.at(i, j) = i;
    return validate_quandle(std::move(t)).value();
}

QuandleMatrix dihedral_quandle(int n) {
    if (n < 1) throw std::invalid_argument("dihedral_quandle: order must be positive");
    Table t(n, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int r = (2 * j - i - 1) % n;
            if (r < 0) r += n;
            t.at(i, j) = r + 1;
        }
    return validate_quandle(std::move(t)).value();
}

QuandleMatrix conj_quandle(const CayleyMatrix& g) {
    const int n = g.order();
    Table t(n, 0);
    for (int b = 1; b <= n; ++b) {
        const int binv = group_inverse(g, b);
        for (int a = 1; a <= n; ++a) t.at(a, b) = g.at(g.at(binv, a), b);
    }
    return validate_quandle(std::move(t)).value();
}

QuandleMatrix dual_quandle(const QuandleMatrix& q) {
    const int n = q.order();
    Table t(n, 0);
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i) t.at(q.at(i, j), j) = i;
    return validate_quandle(std::move(t)).value();
}

CheckResult is_abelian(const QuandleMatrix& q) {
    const int n = q.order();
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c)
                for (int d = 1; d <= n; ++d)
                    if (q.at(q.at(a, b), q.at(c, d)) != q.at(q.at(a, c), q.at(b, d)))
                        return {false, {a, b, c, d}};
    return {};
}

CheckResult is_left_distributive(const QuandleMatrix& q) {
    const int n = q.order();
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c)
                if (q.at(a, q.at(b, c)) != q.at(q.at(a, b), q.at(a, c)))
                    return {false, {a, b, c}};
    return {};
}

bool is_quandle_hom(const std::vector<int>& f, const QuandleMatrix& src,
                    const QuandleMatrix& dst) {
    const int m = src.order();
    if (static_cast<int>(f.size()) != m) return false;
    for (int v : f)
        if (v < 1 || v > dst.order()) return false;
    auto fi = [&](int i) { return f[static_cast<std::size_t>(i - 1)]; };
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (fi(src.at(i, j)) != dst.at(fi(i), fi(j))) return false;
    return true;
}

bool is_quandle_iso(const std::vector<int>& f, const QuandleMatrix& src,
                    const QuandleMatrix& dst) {
    if (src.order() != dst.order()) return false;
    if (!PermutationVector::from_image(f).ok()) return false;
    return is_quandle_hom(f, src, dst);
}

namespace {

// Counts completions of a partial map f(1..assigned) by backtracking;
// checks[i] lists the (a,b) pairs that become checkable once f(i) exists.
std::uint64_t count_homs_rec(const QuandleMatrix& src, const QuandleMatrix& dst,
                             const std::vector<std::vector<std::pair<int, int>>>& checks,
                             std::vector<int>& f, int next) {
    const int m = src.order();
    if (next > m) return 1;
    std::uint64_t total = 0;
    for (int v = 1; v <= dst.order(); ++v) {
        f[static_cast<std::size_t>(next - 1)] = v;
        bool ok = true;
        for (const auto& [a, b] : checks[static_cast<std::size_t>(next)]) {
            const int fa = f[static_cast<std::size_t>(a - 1)];
            const int fb = f[static_cast<std::size_t>(b - 1)];
            const int fab = f[static_cast<std::size_t>(src.at(a, b) - 1)];
            if (fab != dst.at(fa, fb)) {
                ok = false;
                break;
            }
        }
        if (ok) total += count_homs_rec(src, dst, checks, f, next + 1);
    }
    f[static_cast<std::size_t>(next - 1)] = 0;
    return total;
}

}  // namespace

std::uint64_t count_homs(const QuandleMatrix& src, const QuandleMatrix& dst,
                         HomCountCaps caps) {
    if (src.order() > caps.max_src_order)
        throw CapExceeded("count_homs: source order " + std::to_string(src.order()) +
                          " exceeds cap " + std::to_string(caps.max_src_order));
    if (dst.order() > caps.max_dst_order)
        throw CapExceeded("count_homs: target order " + std::to_string(dst.order()) +
                          " exceeds cap " + std::to_string(caps.max_dst_order));

    const int m = src.order();
    std::vector<std::vector<std::pair<int, int>>> checks(static_cast<std::size_t>(m) + 1);
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b) {
            const int ready = std::max({a, b, src.at(a, b)});
            checks[static_cast<std::size_t>(ready)].push_back({a, b});
        }

    std::vector<int> f(static_cast<std::size_t>(m), 0);
    return count_homs_rec(src, dst, checks, f, 1);
}

}  // namespace quandlekit
