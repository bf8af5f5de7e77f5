#pragma once

#include <cstdint>
#include <vector>

#include "quandlekit/group.hpp"
#include "quandlekit/types.hpp"

namespace quandlekit {

/// A validated finite quandle operation table: entry (i,j) = k encodes
/// x_i > x_j = x_k (writing > for the quandle operation). Every instance
/// satisfies the three quandle axioms:
///   (i)   idempotency:              t[i][i] = i,
///   (ii)  column bijectivity:       i |-> t[i][j] permutes {1..n},
///   (iii) right self-distributivity: t[t[i][j]][k] = t[t[i][k]][t[j][k]].
class QuandleMatrix {
public:
    [[nodiscard]] const Table& table() const { return t_; }
    [[nodiscard]] int order() const { return t_.order(); }
    [[nodiscard]] int at(int i, int j) const { return t_.at(i, j); }

    friend bool operator==(const QuandleMatrix& a, const QuandleMatrix& b) {
        return a.t_ == b.t_;
    }
    friend std::strong_ordering operator<=>(const QuandleMatrix& a, const QuandleMatrix& b) {
        return a.t_ <=> b.t_;
    }

private:
    explicit QuandleMatrix(Table t) : t_(std::move(t)) {}
    friend Checked<QuandleMatrix> validate_quandle(Table t);

    Table t_;
};

/// Checks the quandle axioms in a fixed order (entry range, then axioms
/// (i), (ii), (iii), each scanned row-major) and reports the first
/// violation with witness indices.
[[nodiscard]] Checked<QuandleMatrix> validate_quandle(Table t);

/// Overload accepting raw rows; non-square input yields a MalformedShape
/// violation rather than an exception.
[[nodiscard]] Checked<QuandleMatrix> validate_quandle(const std::vector<std::vector<int>>& rows);

/// Trivial quandle T_n: a > b = a.
[[nodiscard]] QuandleMatrix trivial_quandle(int n);

/// Dihedral (cyclic) quandle: i > j = 2j - i mod n, shifted to 1-based
/// labels as ((2j - i - 1) mod n) + 1.
[[nodiscard]] QuandleMatrix dihedral_quandle(int n);

/// Conjugation quandle of a (possibly nonabelian) group: a > b = b^-1 a b.
[[nodiscard]] QuandleMatrix conj_quandle(const CayleyMatrix& g);

/// The dual operation: a < b is the unique c with c > b = a, i.e. each
/// column permutation is inverted. Involutive: dual(dual(q)) == q.
[[nodiscard]] QuandleMatrix dual_quandle(const QuandleMatrix& q);

/// Medial ("abelian") law (a>b) > (c>d) = (a>c) > (b>d) over all
/// quadruples; witness {a, b, c, d} on the first failure.
[[nodiscard]] CheckResult is_abelian(const QuandleMatrix& q);

/// Left distributivity a > (b>c) = (a>b) > (a>c); witness {a, b, c}.
[[nodiscard]] CheckResult is_left_distributive(const QuandleMatrix& q);

/// f maps {1..m} into {1..n} (not necessarily injectively); true iff
/// f(src[i][j]) = dst[f(i)][f(j)] for all i, j.
[[nodiscard]] bool is_quandle_hom(const std::vector<int>& f, const QuandleMatrix& src,
                                  const QuandleMatrix& dst);

/// Hom test plus bijectivity (requires equal orders).
[[nodiscard]] bool is_quandle_iso(const std::vector<int>& f, const QuandleMatrix& src,
                                  const QuandleMatrix& dst);

struct HomCountCaps {
    int max_src_order = 8;
    int max_dst_order = 12;
};

/// Exhaustive count of quandle homomorphisms src -> dst by backtracking
/// over images of 1..m with incremental constraint checks. Worst case is
/// |dst|^|src|, hence the caps; throws CapExceeded beyond them.
[[nodiscard]] std::uint64_t count_homs(const QuandleMatrix& src, const QuandleMatrix& dst,
                                       HomCountCaps caps = {});

}  // namespace quandlekit
