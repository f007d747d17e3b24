#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "deltalab/bitword.hpp"
#include "deltalab/orbit.hpp"

namespace deltalab {

// Binary PBM (P4) fingerprint: stream bit 0 renders black (pixel 1), bit 1
// white (pixel 0). Rows are padded to byte boundaries with 0 bits.
std::vector<std::uint8_t> render_orbit_pbm(const OrbitMatrix& m);

struct DecodedPbm {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<BitWord> bits;  // stream-domain bits, mapping inverted back
};

DecodedPbm decode_orbit_pbm(std::span<const std::uint8_t> bytes);

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

// Unit-step turtle walk: per bit, move forward one unit, then turn by pi/3
// left (bit 1) or right (bit 0). Starts at the origin heading along +x.
struct TurtlePath {
    std::vector<Point2> vertices;  // step count + 1
};

TurtlePath turtle_path(const BitWord& w);

// SVG 1.1 document with a single polyline of the turtle path, viewBox
// fitted to the bounding box with a 5% margin, stroke width 0.05,
// coordinates printed to 6 decimal places.
std::string render_arrowhead_svg(const BitWord& w);

}  // namespace deltalab
