#include "quandlekit/types.hpp"

#include <numeric>

namespace quandlekit {

Table::Table(int order, int fill)
    : n_(order),
      cells_(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), fill) {
    if (order < 0) throw std::invalid_argument("Table: negative order");
}

Table Table::from_rows(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    Table t(n, 0);
    for (int i = 1; i <= n; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i - 1)];
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("Table::from_rows: row " + std::to_string(i) +
                                        " has " + std::to_string(row.size()) +
                                        " entries, expected " + std::to_string(n));
        for (int j = 1; j <= n; ++j) t.at(i, j) = row[static_cast<std::size_t>(j - 1)];
    }
    return t;
}

std::vector<std::vector<int>> Table::rows() const {
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(n_));
    for (int i = 1; i <= n_; ++i) {
        std::vector<int> row;
        row.reserve(static_cast<std::size_t>(n_));
        for (int j = 1; j <= n_; ++j) row.push_back(at(i, j));
        out.push_back(std::move(row));
    }
    return out;
}

const char* rule_name(Violation::Rule rule) {
    switch (rule) {
        case Violation::Rule::MalformedShape: return "malformed-shape";
        case Violation::Rule::EntryOutOfRange: return "entry-out-of-range";
        case Violation::Rule::Idempotency: return "idempotency";
        case Violation::Rule::ColumnBijectivity: return "column-bijectivity";
        case Violation::Rule::RightSelfDistributivity: return "right-self-distributivity";
        case Violation::Rule::IdentityElement: return "identity-element";
        case Violation::Rule::Associativity: return "associativity";
        case Violation::Rule::Commutativity: return "commutativity";
        case Violation::Rule::Inverses: return "inverses";
        case Violation::Rule::LatinSquare: return "latin-square";
        case Violation::Rule::Bijectivity: return "bijectivity";
    }
    return "unknown";
}

PermutationVector PermutationVector::identity(int n) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 1);
    return PermutationVector(std::move(image));
}

Checked<PermutationVector> PermutationVector::from_image(std::vector<int> image) {
    const int n = static_cast<int>(image.size());
    std::vector<int> seen_at(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        const int v = image[static_cast<std::size_t>(i - 1)];
        if (v < 1 || v > n)
            return Violation{Violation::Rule::Bijectivity,
                             {i, v},
                             "entry " + std::to_string(i) + " maps to " + std::to_string(v) +
                                 ", outside {1.." + std::to_string(n) + "}"};
        if (seen_at[static_cast<std::size_t>(v)] != 0)
            return Violation{Violation::Rule::Bijectivity,
                             {seen_at[static_cast<std::size_t>(v)], i, v},
                             "entries " + std::to_string(seen_at[static_cast<std::size_t>(v)]) +
                                 " and " + std::to_string(i) + " both map to " +
                                 std::to_string(v)};
        seen_at[static_cast<std::size_t>(v)] = i;
    }
    return PermutationVector(std::move(image));
}

PermutationVector PermutationVector::inverse() const {
    const int n = order();
    std::vector<int> inv(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
    return PermutationVector(std::move(inv));
}

bool PermutationVector::is_identity() const {
    for (int i = 1; i <= order(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

PermutationVector compose(const PermutationVector& f, const PermutationVector& g) {
    if (f.order() != g.order())
        throw std::invalid_argument("compose: mismatched permutation sizes");
    std::vector<int> image(static_cast<std::size_t>(f.order()));
    for (int i = 1; i <= f.order(); ++i)
        image[static_cast<std::size_t>(i - 1)] = f(g(i));
    return PermutationVector(std::move(image));
}

}  // namespace quandlekit
