#include "deltalab/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace deltalab {

std::vector<std::uint8_t> render_orbit_pbm(const OrbitMatrix& m) {
    const std::size_t cols = m.cols();
    const std::size_t rows = m.rows();
    const std::string header = "P4\n" + std::to_string(cols) + " " + std::to_string(rows) + "\n";
    const std::size_t row_bytes = (cols + 7) / 8;
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.reserve(out.size() + rows * row_bytes);
    for (std::size_t r = 0; r < rows; ++r) {
        const BitWord& bits = m.row(r);
        for (std::size_t byte = 0; byte < row_bytes; ++byte) {
            std::uint8_t packed = 0;
            for (std::size_t j = 0; j < 8; ++j) {
                const std::size_t c = byte * 8 + j;
                if (c >= cols) {
                    break;  // pad bits stay 0
                }
                if (!bits[c]) {
                    packed |= static_cast<std::uint8_t>(0x80u >> j);  // 0 is black
                }
            }
            out.push_back(packed);
        }
    }
    return out;
}

DecodedPbm decode_orbit_pbm(std::span<const std::uint8_t> bytes) {
    std::size_t pos = 0;
    auto need = [&](std::size_t n) {
        if (pos + n > bytes.size()) {
            throw std::invalid_argument("decode_orbit_pbm: truncated file");
        }
    };
    need(2);
    if (bytes[0] != 'P' || bytes[1] != '4') {
        throw std::invalid_argument("decode_orbit_pbm: not a P4 PBM");
    }
    pos = 2;
    auto read_nat = [&]() -> std::size_t {
        while (pos < bytes.size() && std::isspace(bytes[pos])) {
            ++pos;
        }
        need(1);
        if (!std::isdigit(bytes[pos])) {
            throw std::invalid_argument("decode_orbit_pbm: expected a number in the header");
        }
        std::size_t v = 0;
        while (pos < bytes.size() && std::isdigit(bytes[pos])) {
            v = v * 10 + (bytes[pos] - '0');
            ++pos;
        }
        return v;
    };
    DecodedPbm img;
    img.cols = read_nat();
    img.rows = read_nat();
    need(1);
    ++pos;  // the single whitespace byte before the payload
    const std::size_t row_bytes = (img.cols + 7) / 8;
    need(img.rows * row_bytes);
    img.bits.reserve(img.rows);
    for (std::size_t r = 0; r < img.rows; ++r) {
        BitWord row = BitWord::zeros(img.cols);
        for (std::size_t c = 0; c < img.cols; ++c) {
            const std::uint8_t byte = bytes[pos + c / 8];
            const bool pixel = (byte >> (7 - (c % 8))) & 1u;
            row.set(c, !pixel);  // invert the black-is-0 mapping back
        }
        pos += row_bytes;
        img.bits.push_back(std::move(row));
    }
    return img;
}

TurtlePath turtle_path(const BitWord& w) {
    // Headings are multiples of 60 degrees; keep the index exact and look
    // up the step vector.
    static const double kHalfRoot3 = std::sqrt(3.0) / 2.0;
    static const double kDx[6] = {1.0, 0.5, -0.5, -1.0, -0.5, 0.5};
    static const double kDy[6] = {0.0, kHalfRoot3, kHalfRoot3, 0.0, -kHalfRoot3, -kHalfRoot3};

    TurtlePath path;
    path.vertices.reserve(w.size() + 1);
    Point2 cur{0.0, 0.0};
    path.vertices.push_back(cur);
    unsigned heading = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        cur.x += kDx[heading];
        cur.y += kDy[heading];
        path.vertices.push_back(cur);
        heading = w[i] ? (heading + 1) % 6 : (heading + 5) % 6;
    }
    return path;
}

std::string render_arrowhead_svg(const BitWord& w) {
    const TurtlePath path = turtle_path(w);
    double min_x = path.vertices[0].x, max_x = min_x;
    double min_y = -path.vertices[0].y, max_y = min_y;
    for (const auto& v : path.vertices) {
        min_x = std::min(min_x, v.x);
        max_x = std::max(max_x, v.x);
        min_y = std::min(min_y, -v.y);
        max_y = std::max(max_y, -v.y);
    }
    double pad = 0.05 * std::max(max_x - min_x, max_y - min_y);
    if (pad == 0.0) {
        pad = 0.5;
    }
    char buf[128];
    auto fmt = [&buf](double v) {
        if (v == 0.0) {
            v = 0.0;  // never print -0
        }
        std::snprintf(buf, sizeof buf, "%.6f", v);
        return std::string(buf);
    };
    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"";
    svg += fmt(min_x - pad) + " " + fmt(min_y - pad) + " " + fmt(max_x - min_x + 2 * pad) + " " +
           fmt(max_y - min_y + 2 * pad) + "\">\n";
    svg += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"0.05\" points=\"";
    for (std::size_t i = 0; i < path.vertices.size(); ++i) {
        if (i > 0) {
            svg += " ";
        }
        // SVG y grows downward; flip so left turns run counterclockwise.
        svg += fmt(path.vertices[i].x) + "," + fmt(-path.vertices[i].y);
    }
    svg += "\"/>\n</svg>\n";
    return svg;
}

}  // namespace deltalab
