#pragma once

#include <vector>

#include "quandlekit/quandle.hpp"

namespace quandlekit {

// Labeled enumeration is a desk-scale oracle, not a census tool; the count
// grows too fast past order 5 to be useful here.
inline constexpr int kEnumerationCap = 5;

// Every valid quandle table of the given order, labeled (no isomorphism
// rejection), in row-major lexicographic order.  Throws CapExceeded above
// the cap and std::invalid_argument for order < 1.
std::vector<QuandleMatrix> enumerate_quandles(int order);

}  // namespace quandlekit
