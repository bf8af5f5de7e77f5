#include "quandlekit/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace quandlekit {

namespace {

// Columns of a quandle table are permutations fixing their own index; with
// sigma_k = column k, right self-distributivity reads
//   sigma_k . sigma_j = sigma_{sigma_k(j)} . sigma_k   for all j, k.
// The search fixes columns left to right and checks each pair (j, k) as
// soon as all three columns it mentions are placed.

using Perm = std::vector<int>;  // image[i-1] = sigma(i)

bool pair_ok(const std::vector<const Perm*>& col, int j, int k) {
    const Perm& sj = *col[static_cast<std::size_t>(j)];
    const Perm& sk = *col[static_cast<std::size_t>(k)];
    const int m = sk[static_cast<std::size_t>(j - 1)];
    const Perm& sm = *col[static_cast<std::size_t>(m)];
    for (std::size_t i = 0; i < sj.size(); ++i) {
        const int left = sk[static_cast<std::size_t>(sj[i] - 1)];
        const int right = sm[static_cast<std::size_t>(sk[i] - 1)];
        if (left != right) return false;
    }
    return true;
}

bool placed_pairs_ok(const std::vector<const Perm*>& col, int placed) {
    // Only pairs that newly involve the just-placed column need checking.
    for (int j = 1; j <= placed; ++j)
        for (int k = 1; k <= placed; ++k) {
            const Perm& sk = *col[static_cast<std::size_t>(k)];
            const int m = sk[static_cast<std::size_t>(j - 1)];
            if (m > placed) continue;
            if (j != placed && k != placed && m != placed) continue;
            if (!pair_ok(col, j, k)) return false;
        }
    return true;
}

void search(int n, int next, const std::vector<std::vector<Perm>>& candidates,
            std::vector<const Perm*>& col, std::vector<Table>& out) {
    if (next > n) {
        Table t(n, 0);
        for (int j = 1; j <= n; ++j)
            for (int i = 1; i <= n; ++i)
                t.at(i, j) = (*col[static_cast<std::size_t>(j)])[static_cast<std::size_t>(i - 1)];
        out.push_back(std::move(t));
        return;
    }
    for (const Perm& p : candidates[static_cast<std::size_t>(next)]) {
        col[static_cast<std::size_t>(next)] = &p;
        if (placed_pairs_ok(col, next)) search(n, next + 1, candidates, col, out);
    }
    col[static_cast<std::size_t>(next)] = nullptr;
}

}  // namespace

std::vector<QuandleMatrix> enumerate_quandles(int order) {
    if (order < 1) throw std::invalid_argument("enumerate_quandles: order must be positive");
    if (order > kEnumerationCap)
        throw CapExceeded("enumerate_quandles: order " + std::to_string(order) +
                          " exceeds cap " + std::to_string(kEnumerationCap));

    // candidates[j]: permutations with sigma(j) = j, in lexicographic order.
    std::vector<std::vector<Perm>> candidates(static_cast<std::size_t>(order) + 1);
    Perm p(static_cast<std::size_t>(order));
    std::iota(p.begin(), p.end(), 1);
    do {
        for (int j = 1; j <= order; ++j)
            if (p[static_cast<std::size_t>(j - 1)] == j)
                candidates[static_cast<std::size_t>(j)].push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::vector<Table> tables;
    std::vector<const Perm*> col(static_cast<std::size_t>(order) + 1, nullptr);
    search(order, 1, candidates, col, tables);
    std::sort(tables.begin(), tables.end());

    std::vector<QuandleMatrix> out;
    out.reserve(tables.size());
    for (Table& t : tables) out.push_back(validate_quandle(std::move(t)).value());
    return out;
}

}  // namespace quandlekit
