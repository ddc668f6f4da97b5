#include "novikov/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace nov {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string r;
    for (char ch : s) {
        switch (ch) {
        case '<': r += "&lt;"; break;
        case '>': r += "&gt;"; break;
        case '&': r += "&amp;"; break;
        case '"': r += "&quot;"; break;
        default: r += ch;
        }
    }
    return r;
}

} // namespace

std::string barcode_svg(const Barcode& b, const std::string& title) {
    const std::vector<Bar> bars = b.expanded();
    const double width = 640, left = 60, right = 30, top = title.empty() ? 20 : 40, row = 14;
    const double height = top + row * std::max<size_t>(bars.size(), 1) + 40;

    // Axis range from the finite endpoints; pad so infinite bars stand out.
    double lo = 0, hi = 1;
    bool first = true;
    for (const auto& bar : bars) {
        double s = bar.birth.get_d(), e = bar.length ? bar.death()->get_d() : s;
        if (first) lo = s, hi = e, first = false;
        lo = std::min(lo, s);
        hi = std::max(hi, e);
    }
    if (hi - lo < 1e-9) hi = lo + 1;
    const double pad = 0.15 * (hi - lo);
    hi += pad;
    auto x = [&](double v) { return left + (v - lo) / (hi - lo) * (width - left - right); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
        << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!title.empty())
        out << "<text x=\"" << num(width / 2) << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
            << "font-size=\"14\">" << escape(title) << "</text>\n";
    const double axis_y = height - 25;
    out << "<line x1=\"" << num(left) << "\" y1=\"" << num(axis_y) << "\" x2=\"" << num(width - right) << "\" y2=\""
        << num(axis_y) << "\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        double v = lo + (hi - pad - lo) * k / 4.0;
        out << "<line x1=\"" << num(x(v)) << "\" y1=\"" << num(axis_y) << "\" x2=\"" << num(x(v)) << "\" y2=\""
            << num(axis_y + 4) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << num(x(v)) << "\" y=\"" << num(axis_y + 16)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" << num(v) << "</text>\n";
    }
    for (size_t i = 0; i < bars.size(); ++i) {
        const Bar& bar = bars[i];
        const double y = top + row * i + row / 2;
        const double x0 = x(bar.birth.get_d());
        const double x1 = bar.length ? x(bar.death()->get_d()) : width - right;
        out << "<line x1=\"" << num(x0) << "\" y1=\"" << num(y) << "\" x2=\"" << num(x1) << "\" y2=\"" << num(y)
            << "\" stroke=\"" << (bar.length ? "steelblue" : "firebrick") << "\" stroke-width=\"4\"";
        if (!bar.length) out << " stroke-dasharray=\"8 3\"";
        out << "><title>" << format_rational(bar.birth) << " + " << format_ext(bar.length);
        if (bar.degree) out << " (degree " << *bar.degree << ")";
        out << "</title></line>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace nov
