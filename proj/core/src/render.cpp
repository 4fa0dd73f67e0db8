#include "coralarm/render.hpp"

#include <ostream>

namespace coralarm {

void write_svg(std::ostream& os, const ArmState& s, const std::string& caption) {
    const int scale = 40, margin = 20;
    int m = s.width(), n = s.length();
    int w = n * scale + 2 * margin;
    int h = m * scale + 2 * margin + (caption.empty() ? 0 : 24);
    auto px = [&](int col) { return margin + col * scale; };
    auto py = [&](int row) { return margin + (m - row) * scale; };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    os << "  <rect x=\"" << px(0) << "\" y=\"" << py(m) << "\" width=\"" << n * scale
       << "\" height=\"" << m * scale << "\" fill=\"#f8f8f8\" stroke=\"#333\" stroke-width=\"2\"/>\n";
    for (int col = 1; col < n; ++col)
        os << "  <line x1=\"" << px(col) << "\" y1=\"" << py(0) << "\" x2=\"" << px(col)
           << "\" y2=\"" << py(m) << "\" stroke=\"#ddd\"/>\n";
    for (int row = 1; row < m; ++row)
        os << "  <line x1=\"" << px(0) << "\" y1=\"" << py(row) << "\" x2=\"" << px(n)
           << "\" y2=\"" << py(row) << "\" stroke=\"#ddd\"/>\n";

    os << "  <polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"4\" stroke-linecap=\"round\""
          " stroke-linejoin=\"round\" points=\"";
    int col = 0, row = 0;
    os << px(col) << "," << py(row);
    for (Link l : s.links()) {
        if (l == Link::Right) ++col;
        else row += l == Link::Up ? 1 : -1;
        os << " " << px(col) << "," << py(row);
    }
    os << "\"/>\n";
    os << "  <circle cx=\"" << px(0) << "\" cy=\"" << py(0) << "\" r=\"6\" fill=\"#2c3e50\"/>\n";
    os << "  <circle cx=\"" << px(col) << "\" cy=\"" << py(row) << "\" r=\"5\" fill=\"#c0392b\"/>\n";
    if (!caption.empty())
        os << "  <text x=\"" << margin << "\" y=\"" << m * scale + 2 * margin + 14
           << "\" font-family=\"monospace\" font-size=\"14\">" << caption << "</text>\n";
    os << "</svg>\n";
}

}  // namespace coralarm
