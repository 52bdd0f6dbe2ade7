#pragma once

#include <functional>
#include <vector>

#include "tilt/polyomino.hpp"

namespace tilt {

inline constexpr int kEnumerationCap = 11;

// Visits every fixed polyomino of size n exactly once, in canonical form.
// Fixed means distinct up to translation only; no rotations or reflections.
// Throws resource_limit_error when n exceeds max_n (default cap 11).
void for_each_fixed_polyomino(int n, const std::function<void(const Polyomino&)>& visit,
                              int max_n = kEnumerationCap);

std::vector<Polyomino> enumerate_polyominoes(int n, int max_n = kEnumerationCap);

}  // namespace tilt
