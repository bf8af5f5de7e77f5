#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quandlekit/group.hpp"
#include "quandlekit/quandle.hpp"
#include "quandlekit/types.hpp"

namespace quandlekit {

/// Reason a partial-table deduction failed, with the cell that was being
/// written, the clashing values, and (for cell-unification rules) the
/// other cell of the pair.
struct Contradiction {
    enum class Rule {
        SumSymmetry,    ///< the identity a>b + b>a = a + b
        SumExchange,    ///< the identity a>b + b>c = a>c + b
        Commutativity,  ///< x + y = y + x
        Associativity,  ///< (x + y) + z = x + (y + z)
        LatinRow,       ///< duplicate value in a row
        LatinColumn,    ///< duplicate value in a column
    };

    Rule rule;
    int row = 0, col = 0;
    int existing = 0, incoming = 0;
    int other_row = 0, other_col = 0;  // second cell of a unified pair, 0 if n/a

    [[nodiscard]] std::string message() const;
};

[[nodiscard]] const char* rule_name(Contradiction::Rule rule);

/// An abelian-group table under construction: entries in {0..n} with 0
/// marking an unknown cell. Row 1 and column 1 are pinned to the identity
/// pattern, and no nonzero value may repeat within a row or column (every
/// group table is a Latin square, so clashing placements are rejected
/// up front).
class PartialCayley {
public:
    /// Border-seeded table of the given order: row/column 1 hold 1..n,
    /// every other cell unknown.
    explicit PartialCayley(int order);

    [[nodiscard]] int order() const { return n_; }
    [[nodiscard]] int at(int i, int j) const { return cells_.at(i, j); }
    [[nodiscard]] bool complete() const { return unknown_ == 0; }
    [[nodiscard]] int unknown_count() const { return unknown_; }

    struct Cell {
        int row = 0, col = 0;
        friend bool operator==(const Cell&, const Cell&) = default;
    };

    /// Row-major first unknown cell, if any.
    [[nodiscard]] std::optional<Cell> first_zero() const;

    enum class Place { Unchanged, Filled, ClashValue, ClashRow, ClashColumn };

    /// Attempts to write v into (i,j). Rejects (leaving the table intact)
    /// when the cell already holds a different value or v already occurs
    /// in the row or column.
    Place place(int i, int j, int v);

    [[nodiscard]] bool value_in_row(int i, int v) const;
    [[nodiscard]] bool value_in_column(int j, int v) const;

    /// Copies into a plain Table; requires complete().
    [[nodiscard]] Table to_table() const;

    friend bool operator==(const PartialCayley&, const PartialCayley&) = default;

private:
    int n_ = 0;
    int unknown_ = 0;
    Table cells_;
    std::vector<std::uint32_t> row_mask_, col_mask_;
};

/// Starts a Cayley table for an Alexander structure on q with the additive
/// identity pinned at element 1 (no generality is lost: translating by a
/// fixed element is a quandle automorphism, so some relabeling puts the
/// identity first).
[[nodiscard]] PartialCayley seed_partial(const QuandleMatrix& q);

/// Fills cells forced by the two linear identities every Alexander
/// structure satisfies, read off the quandle table:
///   a>b + b>a = a + b      unifies cells (q[a][b], q[b][a]) and (a, b),
///   a>b + b>c = a>c + b    unifies cells (q[a][b], q[b][c]) and (q[a][c], b).
/// Runs to a joint fixpoint, alternating with propagate_group_axioms.
/// A contradiction means q admits no Alexander structure at all.
[[nodiscard]] std::optional<Contradiction> apply_lemma_constraints(const QuandleMatrix& q,
                                                                   PartialCayley& c);

/// Fixpoint of three deduction rules on the partial table: commutativity
/// mirroring, associativity completion (when both inner products of a
/// triple are known, the two outer cells are unified), and Latin-square
/// completion of a row/column with a single unknown.
[[nodiscard]] std::optional<Contradiction> propagate_group_axioms(PartialCayley& c);

/// Row-major first unknown cell.
[[nodiscard]] std::optional<PartialCayley::Cell> find_zero(const PartialCayley& c);

/// All abelian-group completions of the partial table: depth-first search
/// branching on the first unknown cell with candidate values ascending,
/// propagating after each placement, and discarding branches in which some
/// row or column can no longer contain the identity. Completions are
/// revalidated (associativity, commutativity, inverses) before being
/// returned in search order.
[[nodiscard]] std::vector<CayleyMatrix> zero_fill(const PartialCayley& start);

/// An abelian group structure plus the automorphism giving the module
/// action; together they reproduce a quandle via a > b = phi(a) + b - phi(b).
struct AlexanderPresentation {
    CayleyMatrix cayley;
    PermutationVector phi;

    friend bool operator==(const AlexanderPresentation&, const AlexanderPresentation&) = default;
};

/// Builds the quandle table a > b = phi(a) + (b - phi(b)) over the given
/// abelian group. Throws std::invalid_argument unless c is commutative and
/// phi is one of its automorphisms.
[[nodiscard]] QuandleMatrix alexander_quandle(const CayleyMatrix& c,
                                              const PermutationVector& phi);

enum class SearchStatus {
    NotAbelian,    ///< the medial law fails, so no Alexander structure exists
    Contradiction, ///< the forced constraints clash before any search
    NoValidGroup,  ///< search finished with no surviving presentation
    Success,
};

[[nodiscard]] const char* to_string(SearchStatus status);

struct SearchOutcome {
    SearchStatus status = SearchStatus::NoValidGroup;
    std::vector<AlexanderPresentation> presentations;

    /// Failing medial quadruple when status == NotAbelian.
    std::vector<int> abelian_witness;
    /// First clash site when status == Contradiction.
    std::optional<Contradiction> contradiction;

    [[nodiscard]] bool success() const { return status == SearchStatus::Success; }
};

/// Finds every Alexander presentation of q, or certifies there is none:
/// medial pre-check, border seeding, forced-constraint fixpoint,
/// backtracking completion to abelian tables, then for each completion the
/// candidate action phi(i) = q[i][1] (the column of the additive identity)
/// must be a group automorphism and must reproduce q exactly.
/// Distinct labeled tables count as distinct presentations; results are in
/// deterministic search order.
[[nodiscard]] SearchOutcome alexander_presentations(const QuandleMatrix& q);

}  // namespace quandlekit
