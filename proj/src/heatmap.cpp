#include "gpe/heatmap.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace gpe {

std::vector<std::uint8_t> render_heatmap(const std::vector<std::vector<double>>& rows,
                                         double clip_lo, double clip_hi) {
    if (!(clip_lo < clip_hi))
        throw std::invalid_argument("render_heatmap requires clip_lo < clip_hi");
    std::vector<std::uint8_t> px;
    if (rows.empty()) return px;
    const std::size_t w = rows[0].size();
    px.reserve(rows.size() * w);
    const double scale = 255.0 / (clip_hi - clip_lo);
    for (const auto& row : rows) {
        if (row.size() != w)
            throw std::invalid_argument("render_heatmap requires a rectangular matrix");
        for (double v : row) {
            if (!std::isfinite(v))
                throw std::invalid_argument("render_heatmap requires finite values");
            const double x = (v - clip_lo) * scale;
            double level = std::floor(x + 0.5);  // round half up
            if (level < 0.0) level = 0.0;
            if (level > 255.0) level = 255.0;
            px.push_back(static_cast<std::uint8_t>(level));
        }
    }
    return px;
}

void write_pgm(const std::string& path, const std::vector<std::uint8_t>& pixels,
               int width, int height) {
    if (width <= 0 || height <= 0 ||
        pixels.size() != static_cast<std::size_t>(width) * height)
        throw std::invalid_argument("write_pgm: pixel count does not match dimensions");
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << "P5\n" << width << ' ' << height << "\n255\n";
    f.write(reinterpret_cast<const char*>(pixels.data()),
            static_cast<std::streamsize>(pixels.size()));
}

}  // namespace gpe
