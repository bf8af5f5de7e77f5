#pragma once

#include <string>
#include <vector>

#include "quandlekit/quandle.hpp"

namespace quandlekit {

// Generator identifications forced in the Alexanderization of a quandle Q:
// each element i contributes a generator x_i, and each table cell the
// relation t*x_i + (1-t)*x_j = x_{q[i][j]}.  Saturating the rules below
// yields equalities the natural map Q -> A(Q) must respect; a merge of two
// distinct elements certifies non-injectivity.  The check is sound but not
// claimed complete: a failure witnessed only by deeper linear combinations
// can still slip through as inconclusive.

enum class ObstructionRule {
    TrivialAction,       // q[i][j] = i         =>  (1-t)x_i = (1-t)x_j
    ScaledTransfer,      // (1-t)x_a = (1-t)x_b =>  x_{q[k][a]} = x_{q[k][b]}
    ElementCongruence,   // x_i = x_j           =>  scaled copy + row/column images agree
    UnitCancel,          // q[i][j] = j, i != j =>  t*x_i = t*x_j  =>  x_i = x_j
};
const char* rule_name(ObstructionRule rule);

// Which family of equalities a merge lands in.
enum class PartitionId {
    Element,  // x_i = x_j
    Scaled,   // (1-t)x_i = (1-t)x_j
};

// One effective merge.  Premise layout by rule:
//   TrivialAction      {i, j}     the witnessing cell
//   ScaledTransfer     {a, b, k}  scaled pair plus the acting element
//   ElementCongruence  {a, b} for the scaled copy, {a, b, k} for cell images
//   UnitCancel         {i, j}     the witnessing cell
struct ObstructionStep {
    ObstructionRule rule;
    PartitionId target;
    std::vector<int> premises;
    int merged_a = 0;
    int merged_b = 0;

    bool operator==(const ObstructionStep&) const = default;
};

// Final partitions plus the derivation that produced them.  Replaying the
// recorded merges from discrete partitions reproduces both class lists.
struct ObstructionTrace {
    std::vector<std::vector<int>> element_classes;  // ascending members, ordered by minimum
    std::vector<std::vector<int>> scaled_classes;
    std::vector<ObstructionStep> steps;
};

enum class ObstructionStatus {
    NotInjective,   // some element class has size >= 2
    Inconclusive,   // no identification forced; injectivity not decided
};
const char* to_string(ObstructionStatus status);

struct ObstructionVerdict {
    ObstructionStatus status = ObstructionStatus::Inconclusive;
    ObstructionTrace trace;
};

ObstructionVerdict obstruction_check(const QuandleMatrix& q);

// One numbered derivation line per step; "no forced identifications" when
// the trace is empty.
std::string explain_trace(const ObstructionTrace& trace);

}  // namespace quandlekit
