#pragma once

#include <vector>

#include "absorder/absolute_order.hpp"

namespace shapes {

/// Every R = (sigma, tau_0, ..., tau_k) with sigma = (1, ..., r), r = 1..n,
/// and the letters r+1..n each left free, put in tau_0, or put in one of
/// tau_1..tau_k (blocks numbered by first appearance, so each set
/// partition shows up once).  Up to relabeling this covers every shape.
std::vector<absorder::RSpec> prefix_shapes(int n);

}  // namespace shapes
