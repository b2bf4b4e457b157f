#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gpe {

/// Linear map [clip_lo, clip_hi] -> [0, 255], round half up, out-of-range
/// saturated. Row 0 of the input (earliest time) becomes the top image row.
std::vector<std::uint8_t> render_heatmap(const std::vector<std::vector<double>>& rows,
                                         double clip_lo, double clip_hi);

/// Binary PGM (P5), maxval 255.
void write_pgm(const std::string& path, const std::vector<std::uint8_t>& pixels,
               int width, int height);

}  // namespace gpe
