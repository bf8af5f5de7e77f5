#include "quandlekit/group.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace quandlekit {

namespace {

std::string cell(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// First out-of-range entry in row-major order, as a Violation.
std::optional<Violation> entry_range_violation(const Table& t) {
    for (int i = 1; i <= t.order(); ++i)
        for (int j = 1; j <= t.order(); ++j)
            if (!t.in_range(t.at(i, j)))
                return Violation{Violation::Rule::EntryOutOfRange,
                                 {i, j, t.at(i, j)},
                                 "entry " + cell(i, j) + " is " + std::to_string(t.at(i, j)) +
                                     ", outside {1.." + std::to_string(t.order()) + "}"};
    return std::nullopt;
}

void require_in_range(const Table& t, const char* op) {
    if (auto v = entry_range_violation(t))
        throw std::invalid_argument(std::string(op) + ": " + v->message);
}

std::optional<Violation> identity_violation(const Table& t) {
    for (int i = 1; i <= t.order(); ++i) {
        if (t.at(1, i) != i)
            return Violation{Violation::Rule::IdentityElement,
                             {1, i},
                             "row 1 is not the identity row: entry " + cell(1, i) + " is " +
                                 std::to_string(t.at(1, i)) + ", expected " + std::to_string(i)};
        if (t.at(i, 1) != i)
            return Violation{Violation::Rule::IdentityElement,
                             {i, 1},
                             "column 1 is not the identity column: entry " + cell(i, 1) +
                                 " is " + std::to_string(t.at(i, 1)) + ", expected " +
                                 std::to_string(i)};
    }
    return std::nullopt;
}

std::optional<Violation> latin_violation(const Table& t) {
    const int n = t.order();
    std::vector<int> seen(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 1; j <= n; ++j) {
            const int v = t.at(i, j);
            if (seen[static_cast<std::size_t>(v)] != 0)
                return Violation{Violation::Rule::LatinSquare,
                                 {i, seen[static_cast<std::size_t>(v)], j},
                                 "row " + std::to_string(i) + " repeats value " +
                                     std::to_string(v) + " at columns " +
                                     std::to_string(seen[static_cast<std::size_t>(v)]) + " and " +
                                     std::to_string(j)};
            seen[static_cast<std::size_t>(v)] = j;
        }
    }
    for (int j = 1; j <= n; ++j) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int i = 1; i <= n; ++i) {
            const int v = t.at(i, j);
            if (seen[static_cast<std::size_t>(v)] != 0)
                return Violation{Violation::Rule::LatinSquare,
                                 {seen[static_cast<std::size_t>(v)], i, j},
                                 "column " + std::to_string(j) + " repeats value " +
                                     std::to_string(v) + " at rows " +
                                     std::to_string(seen[static_cast<std::size_t>(v)]) + " and " +
                                     std::to_string(i)};
            seen[static_cast<std::size_t>(v)] = i;
        }
    }
    return std::nullopt;
}

// Null when t passes every group-table check; `commutative` reports the
// commutativity scan either way.
std::optional<Violation> group_violation(const Table& t, bool require_commutative,
                                         bool& commutative) {
    commutative = false;
    if (t.order() < 1)
        return Violation{Violation::Rule::MalformedShape, {}, "empty table"};
    if (auto v = entry_range_violation(t)) return *v;
    if (auto v = identity_violation(t)) return *v;

    if (auto assoc = is_associative(t); !assoc)
        return Violation{Violation::Rule::Associativity, assoc.witness,
                         "associativity fails at (i,j,k)=(" + std::to_string(assoc.witness[0]) +
                             "," + std::to_string(assoc.witness[1]) + "," +
                             std::to_string(assoc.witness[2]) + ")"};

    const CheckResult comm = is_commutative(t);
    if (require_commutative && !comm)
        return Violation{Violation::Rule::Commutativity, comm.witness,
                         "commutativity fails at " + cell(comm.witness[0], comm.witness[1])};

    if (auto inv = has_inverses(t); !inv) {
        const std::string what = inv.witness[0] != 0
                                     ? "row " + std::to_string(inv.witness[0])
                                     : "column " + std::to_string(inv.witness[1]);
        return Violation{Violation::Rule::Inverses, inv.witness,
                         what + " does not contain the identity element 1"};
    }

    if (auto v = latin_violation(t)) return *v;

    commutative = comm.ok;
    return std::nullopt;
}

}  // namespace

CheckResult is_associative(const Table& t) {
    require_in_range(t, "is_associative");
    const int n = t.order();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                if (t.at(t.at(i, j), k) != t.at(i, t.at(j, k)))
                    return {false, {i, j, k}};
    return {};
}

CheckResult is_commutative(const Table& t) {
    require_in_range(t, "is_commutative");
    const int n = t.order();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (t.at(i, j) != t.at(j, i)) return {false, {i, j}};
    return {};
}

CheckResult has_inverses(const Table& t) {
    require_in_range(t, "has_inverses");
    const int n = t.order();
    for (int i = 1; i <= n; ++i) {
        bool found = false;
        for (int j = 1; j <= n && !found; ++j) found = t.at(i, j) == 1;
        if (!found) return {false, {i, 0}};
    }
    for (int j = 1; j <= n; ++j) {
        bool found = false;
        for (int i = 1; i <= n && !found; ++i) found = t.at(i, j) == 1;
        if (!found) return {false, {0, j}};
    }
    return {};
}

Checked<CayleyMatrix> validate_group(Table t) {
    bool commutative = false;
    if (auto v = group_violation(t, /*require_commutative=*/false, commutative)) return *v;
    return CayleyMatrix(std::move(t), commutative);
}

Checked<CayleyMatrix> validate_abelian_group(Table t) {
    bool commutative = false;
    if (auto v = group_violation(t, /*require_commutative=*/true, commutative)) return *v;
    return CayleyMatrix(std::move(t), commutative);
}

CayleyMatrix cyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("cyclic_group: order must be positive");
    Table t(n, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) t.at(i, j) = ((i - 1 + j - 1) % n) + 1;
    return validate_abelian_group(std::move(t)).value();
}

CayleyMatrix direct_product(const CayleyMatrix& a, const CayleyMatrix& b) {
    const int na = a.order();
    const int nb = b.order();
    Table t(na * nb, 0);
    for (int ia = 1; ia <= na; ++ia)
        for (int ib = 1; ib <= nb; ++ib)
            for (int ja = 1; ja <= na; ++ja)
                for (int jb = 1; jb <= nb; ++jb) {
                    const int lhs = (ia - 1) * nb + ib;
                    const int rhs = (ja - 1) * nb + jb;
                    t.at(lhs, rhs) = (a.at(ia, ja) - 1) * nb + b.at(ib, jb);
                }
    return validate_group(std::move(t)).value();
}

int group_inverse(const CayleyMatrix& c, int element) {
    if (element < 1 || element > c.order())
        throw std::invalid_argument("group_inverse: element out of range");
    for (int m = 1; m <= c.order(); ++m)
        if (c.at(element, m) == 1) return m;
    throw std::logic_error("group_inverse: no inverse found in a validated table");
}

int element_order(const CayleyMatrix& c, int element) {
    if (element < 1 || element > c.order())
        throw std::invalid_argument("element_order: element out of range");
    int power = element;
    int k = 1;
    while (power != 1) {
        power = c.at(power, element);
        ++k;
    }
    return k;
}

bool is_group_automorphism(const PermutationVector& phi, const CayleyMatrix& c) {
    if (phi.order() != c.order()) return false;
    const int n = c.order();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (phi(c.at(i, j)) != c.at(phi(i), phi(j))) return false;
    return true;
}

namespace {

// Depth-first assignment of phi(2..n); candidates ascending so the output
// comes out in lexicographic order of image vectors.
void automorphism_search(const CayleyMatrix& c, const std::vector<int>& orders,
                         std::vector<int>& image, std::vector<bool>& used, int next,
                         std::vector<PermutationVector>& out) {
    const int n = c.order();
    if (next > n) {
        out.push_back(PermutationVector::from_image(image).value());
        return;
    }
    for (int candidate = 1; candidate <= n; ++candidate) {
        if (used[static_cast<std::size_t>(candidate)]) continue;
        if (orders[static_cast<std::size_t>(candidate)] !=
            orders[static_cast<std::size_t>(next)])
            continue;
        image[static_cast<std::size_t>(next - 1)] = candidate;
        used[static_cast<std::size_t>(candidate)] = true;
        bool consistent = true;
        for (int i = 1; i <= next && consistent; ++i)
            for (int j = 1; j <= next && consistent; ++j) {
                const int p = c.at(i, j);
                if (p > next) continue;
                consistent = image[static_cast<std::size_t>(p - 1)] ==
                             c.at(image[static_cast<std::size_t>(i - 1)],
                                  image[static_cast<std::size_t>(j - 1)]);
            }
        if (consistent) automorphism_search(c, orders, image, used, next + 1, out);
        used[static_cast<std::size_t>(candidate)] = false;
    }
    image[static_cast<std::size_t>(next - 1)] = 0;
}

}  // namespace

std::vector<PermutationVector> automorphism_group(const CayleyMatrix& c, int order_cap) {
    const int n = c.order();
    if (n > order_cap)
        throw CapExceeded("automorphism_group: order " + std::to_string(n) +
                          " exceeds the cap of " + std::to_string(order_cap) +
                          " for the exhaustive scan");
    std::vector<int> orders(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) orders[static_cast<std::size_t>(i)] = element_order(c, i);

    std::vector<int> image(static_cast<std::size_t>(n), 0);
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    image[0] = 1;
    used[1] = true;
    std::vector<PermutationVector> out;
    automorphism_search(c, orders, image, used, 2, out);
    return out;
}

}  // namespace quandlekit
