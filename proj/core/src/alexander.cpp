#include "quandlekit/alexander.hpp"

#include <algorithm>
#include <set>

namespace quandlekit {

const char* rule_name(Contradiction::Rule rule) {
    switch (rule) {
        case Contradiction::Rule::SumSymmetry: return "sum-symmetry";
        case Contradiction::Rule::SumExchange: return "sum-exchange";
        case Contradiction::Rule::Commutativity: return "commutativity";
        case Contradiction::Rule::Associativity: return "associativity";
        case Contradiction::Rule::LatinRow: return "latin-row";
        case Contradiction::Rule::LatinColumn: return "latin-column";
    }
    return "unknown";
}

std::string Contradiction::message() const {
    const std::string cell = "(" + std::to_string(row) + "," + std::to_string(col) + ")";
    const std::string source =
        other_row != 0
            ? " by cell (" + std::to_string(other_row) + "," + std::to_string(other_col) + ")"
            : "";
    if (rule == Rule::LatinRow)
        return std::string(rule_name(rule)) + ": value " + std::to_string(incoming) +
               " forced into cell " + cell + source + " already appears in row " +
               std::to_string(row);
    if (rule == Rule::LatinColumn)
        return std::string(rule_name(rule)) + ": value " + std::to_string(incoming) +
               " forced into cell " + cell + source + " already appears in column " +
               std::to_string(col);
    return std::string(rule_name(rule)) + ": cell " + cell + " holds " +
           std::to_string(existing) + " but is forced to " + std::to_string(incoming) + source;
}

PartialCayley::PartialCayley(int order)
    : n_(order), unknown_((order - 1) * (order - 1)), cells_(order, 0),
      row_mask_(static_cast<std::size_t>(order) + 1, 0),
      col_mask_(static_cast<std::size_t>(order) + 1, 0) {
    if (order < 1) throw std::invalid_argument("PartialCayley: order must be positive");
    if (order > 31) throw CapExceeded("PartialCayley: order above 31 is unsupported");
    for (int i = 1; i <= n_; ++i) {
        cells_.at(1, i) = i;
        cells_.at(i, 1) = i;
        row_mask_[1] |= 1u << i;
        col_mask_[1] |= 1u << i;
        row_mask_[static_cast<std::size_t>(i)] |= 1u << i;
        col_mask_[static_cast<std::size_t>(i)] |= 1u << i;
    }
}

std::optional<PartialCayley::Cell> PartialCayley::first_zero() const {
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            if (cells_.at(i, j) == 0) return Cell{i, j};
    return std::nullopt;
}

PartialCayley::Place PartialCayley::place(int i, int j, int v) {
    const int current = cells_.at(i, j);
    if (current == v) return Place::Unchanged;
    if (current != 0) return Place::ClashValue;
    if (value_in_row(i, v)) return Place::ClashRow;
    if (value_in_column(j, v)) return Place::ClashColumn;
    cells_.at(i, j) = v;
    row_mask_[static_cast<std::size_t>(i)] |= 1u << v;
    col_mask_[static_cast<std::size_t>(j)] |= 1u << v;
    --unknown_;
    return Place::Filled;
}

bool PartialCayley::value_in_row(int i, int v) const {
    return (row_mask_[static_cast<std::size_t>(i)] >> v) & 1u;
}

bool PartialCayley::value_in_column(int j, int v) const {
    return (col_mask_[static_cast<std::size_t>(j)] >> v) & 1u;
}

Table PartialCayley::to_table() const {
    if (!complete()) throw std::logic_error("PartialCayley::to_table: table is incomplete");
    return cells_;
}

PartialCayley seed_partial(const QuandleMatrix& q) { return PartialCayley(q.order()); }

namespace {

// Writes v into (i,j), recording a Contradiction on clash. The pair
// (pr,pc) names the cell the value came from, for diagnostics.
bool write_cell(PartialCayley& c, int i, int j, int v, Contradiction::Rule rule, int pr, int pc,
                std::optional<Contradiction>& contra, bool& changed) {
    switch (c.place(i, j, v)) {
        case PartialCayley::Place::Unchanged: return true;
        case PartialCayley::Place::Filled: changed = true; return true;
        case PartialCayley::Place::ClashValue:
            contra = Contradiction{rule, i, j, c.at(i, j), v, pr, pc};
            return false;
        case PartialCayley::Place::ClashRow:
            contra = Contradiction{Contradiction::Rule::LatinRow, i, j, c.at(i, j), v, pr, pc};
            return false;
        case PartialCayley::Place::ClashColumn:
            contra = Contradiction{Contradiction::Rule::LatinColumn, i, j, c.at(i, j), v, pr, pc};
            return false;
    }
    return false;
}

// Declares cells (ar,ac) and (br,bc) equal: fills the unknown side from
// the known one.
bool unify_cells(PartialCayley& c, int ar, int ac, int br, int bc, Contradiction::Rule rule,
                 std::optional<Contradiction>& contra, bool& changed) {
    const int a = c.at(ar, ac);
    const int b = c.at(br, bc);
    if (a == b) return true;  // includes both-unknown
    if (a == 0) return write_cell(c, ar, ac, b, rule, br, bc, contra, changed);
    if (b == 0) return write_cell(c, br, bc, a, rule, ar, ac, contra, changed);
    contra = Contradiction{rule, br, bc, b, a, ar, ac};
    return false;
}

bool commutativity_pass(PartialCayley& c, std::optional<Contradiction>& contra, bool& changed) {
    const int n = c.order();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (!unify_cells(c, i, j, j, i, Contradiction::Rule::Commutativity, contra, changed))
                return false;
    return true;
}

bool associativity_pass(PartialCayley& c, std::optional<Contradiction>& contra, bool& changed) {
    const int n = c.order();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const int ij = c.at(i, j);
            if (ij == 0) continue;
            for (int k = 1; k <= n; ++k) {
                const int jk = c.at(j, k);
                if (jk == 0) continue;
                // (i*j)*k = i*(j*k): unify cells (ij,k) and (i,jk)
                if (!unify_cells(c, ij, k, i, jk, Contradiction::Rule::Associativity, contra,
                                 changed))
                    return false;
            }
        }
    return true;
}

bool latin_pass(PartialCayley& c, std::optional<Contradiction>& contra, bool& changed) {
    const int n = c.order();
    for (int i = 1; i <= n; ++i) {
        int zeros = 0, zero_col = 0;
        for (int j = 1; j <= n; ++j)
            if (c.at(i, j) == 0) {
                ++zeros;
                zero_col = j;
            }
        if (zeros == 1) {
            for (int v = 1; v <= n; ++v)
                if (!c.value_in_row(i, v)) {
                    if (!write_cell(c, i, zero_col, v, Contradiction::Rule::LatinRow, 0, 0,
                                    contra, changed))
                        return false;
                    break;
                }
        }
    }
    for (int j = 1; j <= n; ++j) {
        int zeros = 0, zero_row = 0;
        for (int i = 1; i <= n; ++i)
            if (c.at(i, j) == 0) {
                ++zeros;
                zero_row = i;
            }
        if (zeros == 1) {
            for (int v = 1; v <= n; ++v)
                if (!c.value_in_column(j, v)) {
                    if (!write_cell(c, zero_row, j, v, Contradiction::Rule::LatinColumn, 0, 0,
                                    contra, changed))
                        return false;
                    break;
                }
        }
    }
    return true;
}

bool lemma_pass(const QuandleMatrix& q, PartialCayley& c, std::optional<Contradiction>& contra,
                bool& changed) {
    const int n = q.order();
    // a>b + b>a = a + b
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            if (!unify_cells(c, q.at(a, b), q.at(b, a), a, b, Contradiction::Rule::SumSymmetry,
                             contra, changed))
                return false;
    // a>b + b>k = a>k + b
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int k = 1; k <= n; ++k)
                if (!unify_cells(c, q.at(a, b), q.at(b, k), q.at(a, k), b,
                                 Contradiction::Rule::SumExchange, contra, changed))
                    return false;
    return true;
}

// Every row and column must still be able to receive the identity: a line
// with neither a 1 nor a blank cell cannot complete to a group table.
bool identity_feasible(const PartialCayley& c) {
    const int n = c.order();
    for (int i = 1; i <= n; ++i) {
        if (!c.value_in_row(i, 1)) {
            bool has_zero = false;
            for (int j = 1; j <= n && !has_zero; ++j) has_zero = c.at(i, j) == 0;
            if (!has_zero) return false;
        }
        if (!c.value_in_column(i, 1)) {
            bool has_zero = false;
            for (int r = 1; r <= n && !has_zero; ++r) has_zero = c.at(r, i) == 0;
            if (!has_zero) return false;
        }
    }
    return true;
}

void zero_fill_rec(const PartialCayley& c, std::set<Table>& seen,
                   std::vector<CayleyMatrix>& out) {
    if (!identity_feasible(c)) return;
    const auto blank = c.first_zero();
    if (!blank) {
        Table t = c.to_table();
        if (auto validated = validate_abelian_group(std::move(t));
            validated.ok() && seen.insert(validated.value().table()).second)
            out.push_back(validated.value());
        return;
    }
    for (int v = 1; v <= c.order(); ++v) {
        PartialCayley child = c;
        if (child.place(blank->row, blank->col, v) != PartialCayley::Place::Filled) continue;
        if (propagate_group_axioms(child)) continue;  // contradictory branch
        zero_fill_rec(child, seen, out);
    }
}

}  // namespace

std::optional<Contradiction> propagate_group_axioms(PartialCayley& c) {
    std::optional<Contradiction> contra;
    bool changed = true;
    while (changed && !contra) {
        changed = false;
        if (!commutativity_pass(c, contra, changed)) break;
        if (!associativity_pass(c, contra, changed)) break;
        if (!latin_pass(c, contra, changed)) break;
    }
    return contra;
}

std::optional<Contradiction> apply_lemma_constraints(const QuandleMatrix& q, PartialCayley& c) {
    std::optional<Contradiction> contra;
    bool changed = true;
    while (changed && !contra) {
        changed = false;
        if (!lemma_pass(q, c, contra, changed)) break;
        if ((contra = propagate_group_axioms(c))) break;
    }
    return contra;
}

std::optional<PartialCayley::Cell> find_zero(const PartialCayley& c) { return c.first_zero(); }

std::vector<CayleyMatrix> zero_fill(const PartialCayley& start) {
    std::vector<CayleyMatrix> out;
    std::set<Table> seen;
    zero_fill_rec(start, seen, out);
    return out;
}

namespace {

Table reconstruct_table(const CayleyMatrix& c, const PermutationVector& phi) {
    const int n = c.order();
    Table t(n, 0);
    for (int b = 1; b <= n; ++b) {
        // shift = b - phi(b)
        const int shift = c.at(b, group_inverse(c, phi(b)));
        for (int a = 1; a <= n; ++a) t.at(a, b) = c.at(phi(a), shift);
    }
    return t;
}

PermutationVector first_column_action(const QuandleMatrix& q) {
    std::vector<int> image(static_cast<std::size_t>(q.order()));
    for (int i = 1; i <= q.order(); ++i)
        image[static_cast<std::size_t>(i - 1)] = q.at(i, 1);
    // column 1 of a quandle table is a permutation fixing 1
    return PermutationVector::from_image(std::move(image)).value();
}

}  // namespace

QuandleMatrix alexander_quandle(const CayleyMatrix& c, const PermutationVector& phi) {
    if (!c.commutative())
        throw std::invalid_argument("alexander_quandle: group table must be commutative");
    if (phi.order() != c.order())
        throw std::invalid_argument("alexander_quandle: phi order mismatch");
    if (!is_group_automorphism(phi, c))
        throw std::invalid_argument("alexander_quandle: phi is not an automorphism of the table");
    return validate_quandle(reconstruct_table(c, phi)).value();
}

const char* to_string(SearchStatus status) {
    switch (status) {
        case SearchStatus::NotAbelian: return "not-abelian";
        case SearchStatus::Contradiction: return "contradiction";
        case SearchStatus::NoValidGroup: return "no-valid-group";
        case SearchStatus::Success: return "success";
    }
    return "unknown";
}

SearchOutcome alexander_presentations(const QuandleMatrix& q) {
    SearchOutcome outcome;

    if (auto medial = is_abelian(q); !medial) {
        outcome.status = SearchStatus::NotAbelian;
        outcome.abelian_witness = medial.witness;
        return outcome;
    }

    if (q.order() == 1) {
        outcome.status = SearchStatus::Success;
        outcome.presentations.push_back({cyclic_group(1), PermutationVector::identity(1)});
        return outcome;
    }

    PartialCayley partial = seed_partial(q);
    if (auto contra = apply_lemma_constraints(q, partial)) {
        outcome.status = SearchStatus::Contradiction;
        outcome.contradiction = contra;
        return outcome;
    }

    const PermutationVector phi = first_column_action(q);
    for (const CayleyMatrix& table : zero_fill(partial)) {
        if (!is_group_automorphism(phi, table)) continue;
        if (reconstruct_table(table, phi) != q.table()) continue;
        outcome.presentations.push_back({table, phi});
    }
    outcome.status =
        outcome.presentations.empty() ? SearchStatus::NoValidGroup : SearchStatus::Success;
    return outcome;
}

}  // namespace quandlekit
