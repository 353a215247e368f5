#pragma once

#include <algorithm>
#include <fstream>
#include <string>
#include <vector>

namespace symsq_cli {

// Minimal line chart; convenience output only, never an acceptance artifact.
inline void write_svg_line_chart(const std::string& path,
                                 const std::vector<double>& xs,
                                 const std::vector<double>& ys,
                                 const std::string& x_label,
                                 const std::string& y_label) {
    if (xs.size() != ys.size() || xs.empty()) return;
    const int w = 640, h = 420, margin = 56;
    double xmin = *std::min_element(xs.begin(), xs.end());
    double xmax = *std::max_element(xs.begin(), xs.end());
    double ymin = *std::min_element(ys.begin(), ys.end());
    double ymax = *std::max_element(ys.begin(), ys.end());
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;

    auto px = [&](double x) { return margin + (x - xmin) / (xmax - xmin) * (w - 2 * margin); };
    auto py = [&](double y) { return h - margin - (y - ymin) / (ymax - ymin) * (h - 2 * margin); };

    std::ofstream out(path);
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='" << h << "'>\n";
    out << "<rect width='100%' height='100%' fill='white'/>\n";
    out << "<line x1='" << margin << "' y1='" << h - margin << "' x2='" << w - margin
        << "' y2='" << h - margin << "' stroke='black'/>\n";
    out << "<line x1='" << margin << "' y1='" << margin << "' x2='" << margin
        << "' y2='" << h - margin << "' stroke='black'/>\n";
    out << "<polyline fill='none' stroke='steelblue' stroke-width='1.5' points='";
    for (std::size_t i = 0; i < xs.size(); ++i)
        out << px(xs[i]) << "," << py(ys[i]) << " ";
    out << "'/>\n";
    for (std::size_t i = 0; i < xs.size(); ++i)
        out << "<circle cx='" << px(xs[i]) << "' cy='" << py(ys[i])
            << "' r='2.5' fill='steelblue'/>\n";
    out << "<text x='" << w / 2 << "' y='" << h - 12 << "' font-size='12' text-anchor='middle'>"
        << x_label << "</text>\n";
    out << "<text x='14' y='" << h / 2 << "' font-size='12' text-anchor='middle' "
        << "transform='rotate(-90 14 " << h / 2 << ")'>" << y_label << "</text>\n";
    out << "</svg>\n";
}

} // namespace symsq_cli
