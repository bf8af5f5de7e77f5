#include "quandlekit/obstruction.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <utility>

namespace quandlekit {

const char* rule_name(ObstructionRule rule) {
    switch (rule) {
        case ObstructionRule::TrivialAction: return "trivial-action";
        case ObstructionRule::ScaledTransfer: return "scaled-transfer";
        case ObstructionRule::ElementCongruence: return "element-congruence";
        case ObstructionRule::UnitCancel: return "unit-cancel";
    }
    return "unknown";
}

const char* to_string(ObstructionStatus status) {
    switch (status) {
        case ObstructionStatus::NotInjective: return "not-injective";
        case ObstructionStatus::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

namespace {

// 1-based union-find; the smallest label of a class is its root, so class
// listings come out canonically ordered with no extra sorting.
class Partition {
public:
    explicit Partition(int n) : parent_(static_cast<std::size_t>(n) + 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] =
                parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }

    bool merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent_[static_cast<std::size_t>(b)] = a;
        return true;
    }

    std::vector<std::vector<int>> classes(int n) {
        std::vector<std::vector<int>> by_root(static_cast<std::size_t>(n) + 1);
        for (int x = 1; x <= n; ++x) by_root[static_cast<std::size_t>(find(x))].push_back(x);
        std::vector<std::vector<int>> out;
        for (auto& cls : by_root)
            if (!cls.empty()) out.push_back(std::move(cls));
        return out;
    }

private:
    std::vector<int> parent_;
};

struct Saturation {
    Partition element;
    Partition scaled;
    std::vector<ObstructionStep> steps;
    std::deque<std::pair<PartitionId, std::pair<int, int>>> pending;

    explicit Saturation(int n) : element(n), scaled(n) {}

    void merge(PartitionId target, int a, int b, ObstructionRule rule,
               std::vector<int> premises) {
        Partition& part = target == PartitionId::Element ? element : scaled;
        if (!part.merge(a, b)) return;
        steps.push_back({rule, target, std::move(premises), a, b});
        pending.push_back({target, {a, b}});
    }
};

}  // namespace

ObstructionVerdict obstruction_check(const QuandleMatrix& q) {
    const int n = q.order();
    Saturation s(n);

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            if (q.at(i, j) == i)
                s.merge(PartitionId::Scaled, i, j, ObstructionRule::TrivialAction, {i, j});
            else if (q.at(i, j) == j)
                s.merge(PartitionId::Element, i, j, ObstructionRule::UnitCancel, {i, j});
        }

    // Closure over generating pairs suffices: every conclusion lands in a
    // partition, so transitivity supplies the composite cases.
    while (!s.pending.empty()) {
        const auto [target, pair] = s.pending.front();
        s.pending.pop_front();
        const auto [a, b] = pair;
        if (target == PartitionId::Scaled) {
            for (int k = 1; k <= n; ++k)
                s.merge(PartitionId::Element, q.at(k, a), q.at(k, b),
                        ObstructionRule::ScaledTransfer, {a, b, k});
        } else {
            s.merge(PartitionId::Scaled, a, b, ObstructionRule::ElementCongruence, {a, b});
            for (int k = 1; k <= n; ++k) {
                s.merge(PartitionId::Element, q.at(a, k), q.at(b, k),
                        ObstructionRule::ElementCongruence, {a, b, k});
                s.merge(PartitionId::Element, q.at(k, a), q.at(k, b),
                        ObstructionRule::ElementCongruence, {a, b, k});
            }
        }
    }

    ObstructionVerdict verdict;
    verdict.trace.element_classes = s.element.classes(n);
    verdict.trace.scaled_classes = s.scaled.classes(n);
    verdict.trace.steps = std::move(s.steps);
    const bool merged = std::any_of(verdict.trace.element_classes.begin(),
                                    verdict.trace.element_classes.end(),
                                    [](const std::vector<int>& cls) { return cls.size() > 1; });
    verdict.status = merged ? ObstructionStatus::NotInjective : ObstructionStatus::Inconclusive;
    return verdict;
}

namespace {

std::string x(int i) { return "x" + std::to_string(i); }

std::string render_step(const ObstructionStep& s) {
    const std::string tag = "[" + std::string(rule_name(s.rule)) + "] ";
    switch (s.rule) {
        case ObstructionRule::TrivialAction: {
            const int i = s.premises[0], j = s.premises[1];
            return tag + "t " + x(i) + " + (1-t) " + x(j) + " = " + x(i) + ", hence (1-t) " +
                   x(i) + " = (1-t) " + x(j);
        }
        case ObstructionRule::ScaledTransfer: {
            const int a = s.premises[0], b = s.premises[1], k = s.premises[2];
            return tag + "(1-t) " + x(a) + " = (1-t) " + x(b) + ", hence t " + x(k) +
                   " + (1-t) " + x(a) + " = t " + x(k) + " + (1-t) " + x(b) + ", hence " +
                   x(s.merged_a) + " = " + x(s.merged_b);
        }
        case ObstructionRule::ElementCongruence: {
            const int a = s.premises[0], b = s.premises[1];
            if (s.target == PartitionId::Scaled)
                return tag + x(a) + " = " + x(b) + ", hence (1-t) " + x(a) + " = (1-t) " + x(b);
            const int k = s.premises[2];
            return tag + x(a) + " = " + x(b) + ", hence " + x(s.merged_a) + " = " +
                   x(s.merged_b) + " (acting with " + x(k) + ")";
        }
        case ObstructionRule::UnitCancel: {
            const int i = s.premises[0], j = s.premises[1];
            return tag + "t " + x(i) + " + (1-t) " + x(j) + " = " + x(j) + ", hence t " + x(i) +
                   " = t " + x(j) + ", hence " + x(i) + " = " + x(j);
        }
    }
    return tag;
}

}  // namespace

std::string explain_trace(const ObstructionTrace& trace) {
    if (trace.steps.empty()) return "no forced identifications";
    std::string out;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        out += std::to_string(i + 1) + ". " + render_step(trace.steps[i]);
        if (i + 1 < trace.steps.size()) out += '\n';
    }
    return out;
}

}  // namespace quandlekit
