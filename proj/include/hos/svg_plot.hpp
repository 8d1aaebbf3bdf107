#pragma once

#include <string>
#include <vector>

#include "hos/experiments.hpp"

namespace hos {

/// Success rate vs K as an SVG line plot with a red vertical marker at K = N.
void write_rate_svg(const std::string& path, const std::vector<RatePoint>& table,
                    int n_marker, const std::string& title);

}  // namespace hos
