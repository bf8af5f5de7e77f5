#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace quandlekit {

/// Square table of small integers. Rows, columns and entries are all
/// 1-based: entry values live in {1..n} (0 is reserved for "unknown" in
/// partial tables). This matches the matrix notation used everywhere in
/// the library, so formulas transcribe directly.
class Table {
public:
    Table() = default;
    Table(int order, int fill);

    /// Builds a table from row vectors. Throws std::invalid_argument if
    /// the input is not square. Entry ranges are NOT checked here; that
    /// is the validators' job.
    static Table from_rows(const std::vector<std::vector<int>>& rows);

    [[nodiscard]] int order() const { return n_; }
    [[nodiscard]] int at(int i, int j) const { return cells_[index(i, j)]; }
    int& at(int i, int j) { return cells_[index(i, j)]; }
    [[nodiscard]] bool in_range(int v) const { return v >= 1 && v <= n_; }

    [[nodiscard]] std::vector<std::vector<int>> rows() const;
    [[nodiscard]] const std::vector<int>& cells() const { return cells_; }

    friend bool operator==(const Table&, const Table&) = default;
    friend std::strong_ordering operator<=>(const Table&, const Table&) = default;

private:
    [[nodiscard]] std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j - 1);
    }

    int n_ = 0;
    std::vector<int> cells_;
};

/// First failed structural check of a candidate table, with witness
/// indices (1-based) in a fixed scan order so error reports are
/// deterministic.
struct Violation {
    enum class Rule {
        MalformedShape,
        EntryOutOfRange,
        Idempotency,
        ColumnBijectivity,
        RightSelfDistributivity,
        IdentityElement,
        Associativity,
        Commutativity,
        Inverses,
        LatinSquare,
        Bijectivity,
    };

    Rule rule;
    std::vector<int> witness;
    std::string message;
};

[[nodiscard]] const char* rule_name(Violation::Rule rule);

/// Result of a validation: either the validated value or the first
/// Violation encountered.
template <typename T>
class Checked {
public:
    Checked(T value) : state_(std::move(value)) {}
    Checked(Violation violation) : state_(std::move(violation)) {}

    [[nodiscard]] bool ok() const { return std::holds_alternative<T>(state_); }
    explicit operator bool() const { return ok(); }

    [[nodiscard]] const T& value() const& {
        if (!ok()) throw std::logic_error("Checked::value() on failed validation: " +
                                          std::get<Violation>(state_).message);
        return std::get<T>(state_);
    }
    [[nodiscard]] T&& value() && {
        if (!ok()) throw std::logic_error("Checked::value() on failed validation: " +
                                          std::get<Violation>(state_).message);
        return std::get<T>(std::move(state_));
    }
    [[nodiscard]] const Violation& violation() const {
        if (ok()) throw std::logic_error("Checked::violation() on successful validation");
        return std::get<Violation>(state_);
    }

private:
    std::variant<T, Violation> state_;
};

/// Yes/no answer carrying the first counterexample when the answer is no.
/// The witness layout depends on the check (documented per operation).
struct CheckResult {
    bool ok = true;
    std::vector<int> witness{};

    explicit operator bool() const { return ok; }
};

/// Thrown when an exhaustive operation would exceed its configured size cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A bijection on {1..n} stored as its image vector: entry i is the image
/// of element i.
class PermutationVector {
public:
    static PermutationVector identity(int n);

    /// Validates that `image` really is a bijection on {1..n}.
    static Checked<PermutationVector> from_image(std::vector<int> image);

    [[nodiscard]] int order() const { return static_cast<int>(image_.size()); }
    [[nodiscard]] int operator()(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }
    [[nodiscard]] const std::vector<int>& image() const { return image_; }

    [[nodiscard]] PermutationVector inverse() const;
    [[nodiscard]] bool is_identity() const;

    friend bool operator==(const PermutationVector&, const PermutationVector&) = default;
    friend std::strong_ordering operator<=>(const PermutationVector&,
                                            const PermutationVector&) = default;

    /// compose(f, g) applies g first: (f o g)(i) = f(g(i)).
    friend PermutationVector compose(const PermutationVector& f, const PermutationVector& g);

private:
    explicit PermutationVector(std::vector<int> image) : image_(std::move(image)) {}

    std::vector<int> image_;
};

PermutationVector compose(const PermutationVector& f, const PermutationVector& g);

}  // namespace quandlekit
