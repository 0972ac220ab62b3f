#pragma once

#include <string>

#include "halfball/hyp2.hpp"

namespace halfball::figures {

/// Axes only.
std::string axes_svg();

/// Q_R(z) with its bounding lines, the half ball b_R(z) and the markers q±, p±.
std::string rectangle_svg(const hyp2::HPoint& z, double radius);

/// `count` half balls b_R(x_k + i) side by side at Euclidean spacing 2 tanh R,
/// on the horocycle of height 1.
std::string tiling_svg(int count, double radius);

/// Packing level ℓ: the half balls b_{2^ℓ}(x + i e^{-2^ℓ}), x in [-1, 1], and
/// the satellite balls B_1(±1 + i). At most `max_drawn` half balls are drawn.
std::string packing_svg(int level, int max_drawn = 400);

}  // namespace halfball::figures
