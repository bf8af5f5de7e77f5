#pragma once

#include <vector>

#include "quandlekit/types.hpp"

namespace quandlekit {

/// A validated group operation table in standard form: element 1 is the
/// identity, so row 1 and column 1 read 1..n. Commutativity is recorded
/// at validation time; validate_group() accepts nonabelian tables (needed
/// for conjugation quandles), validate_abelian_group() does not.
class CayleyMatrix {
public:
    [[nodiscard]] const Table& table() const { return t_; }
    [[nodiscard]] int order() const { return t_.order(); }
    [[nodiscard]] int at(int i, int j) const { return t_.at(i, j); }
    [[nodiscard]] bool commutative() const { return commutative_; }

    friend bool operator==(const CayleyMatrix& a, const CayleyMatrix& b) { return a.t_ == b.t_; }
    friend std::strong_ordering operator<=>(const CayleyMatrix& a, const CayleyMatrix& b) {
        return a.t_ <=> b.t_;
    }

private:
    CayleyMatrix(Table t, bool commutative) : t_(std::move(t)), commutative_(commutative) {}
    friend Checked<CayleyMatrix> validate_group(Table t);
    friend Checked<CayleyMatrix> validate_abelian_group(Table t);

    Table t_;
    bool commutative_;
};

/// Associativity scan over all triples (i,j,k) in row-major order.
/// Witness on failure: {i, j, k}. Entries must lie in {1..n}.
[[nodiscard]] CheckResult is_associative(const Table& t);

/// Commutativity scan; witness {i, j} with t[i][j] != t[j][i].
[[nodiscard]] CheckResult is_commutative(const Table& t);

/// Checks that every row and every column contains the identity element 1.
/// Witness: {i, 0} for a row without 1, {0, j} for a column without 1.
[[nodiscard]] CheckResult has_inverses(const Table& t);

/// Full group-table validation in a fixed order: entry range, standard-form
/// identity, associativity, inverses, Latin-square rows/columns.
/// Commutativity is tested and recorded but not required.
[[nodiscard]] Checked<CayleyMatrix> validate_group(Table t);

/// Like validate_group but additionally requires commutativity (checked
/// between associativity and inverses).
[[nodiscard]] Checked<CayleyMatrix> validate_abelian_group(Table t);

/// Cyclic group Z_n in standard form: entry (i,j) = ((i-1 + j-1) mod n) + 1.
[[nodiscard]] CayleyMatrix cyclic_group(int n);

/// Direct product on pairs (i_a, i_b) |-> (i_a - 1)|b| + i_b, row-major.
[[nodiscard]] CayleyMatrix direct_product(const CayleyMatrix& a, const CayleyMatrix& b);

/// The unique m with c[i][m] = 1.
[[nodiscard]] int group_inverse(const CayleyMatrix& c, int element);

/// Multiplicative order of an element (smallest k >= 1 with g^k = 1).
[[nodiscard]] int element_order(const CayleyMatrix& c, int element);

/// Elementwise automorphism test: phi(c[i][j]) == c[phi(i)][phi(j)] for all
/// i, j. Equivalent to permuting entries and then un-permuting rows and
/// columns by phi.
[[nodiscard]] bool is_group_automorphism(const PermutationVector& phi, const CayleyMatrix& c);

/// All automorphisms of c, in lexicographic order of their image vectors.
/// Backtracking over permutations fixing 1, pruned so each element can only
/// map to an element of the same order. Throws CapExceeded when
/// c.order() > order_cap (default 10; the scan is exhaustive and meant for
/// desk-scale orders).
[[nodiscard]] std::vector<PermutationVector> automorphism_group(const CayleyMatrix& c,
                                                                int order_cap = 10);

}  // namespace quandlekit
