// Copyright 2026 The hflm Authors
// SPDX-License-Identifier: Apache-2.0
#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace hflm_cli {
namespace {

constexpr double kWidth = 640, kHeight = 420;
constexpr double kLeft = 80, kRight = 150, kTop = 40, kBottom = 60;

char const* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                               "#ff7f0e", "#17becf", "#8c564b", "#7f7f7f"};

std::string num(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

std::string tick(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

std::string escape(std::string const& s)
{
    std::string out;
    for (char c : s)
    {
        switch (c)
        {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

struct Axis
{
    double lo = 0.0, hi = 1.0;
    bool log = false;

    double map(double v) const { return ((log ? std::log10(v) : v) - lo) / (hi - lo); }
};

Axis make_axis(std::vector<double> const& v, bool log)
{
    Axis a;
    a.log = log;
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (double x : v)
    {
        double const t = log ? std::log10(x) : x;
        lo = std::min(lo, t);
        hi = std::max(hi, t);
    }
    if (!(lo <= hi))
        lo = 0.0, hi = 1.0;
    if (hi - lo < 1e-12 * std::max(1.0, std::abs(hi)))
        lo -= 0.5, hi += 0.5;
    double const pad = log ? 0.0 : 0.05 * (hi - lo);
    a.lo = log ? std::floor(lo) : lo - pad;
    a.hi = log ? std::ceil(hi) : hi + pad;
    if (a.hi == a.lo)
        a.hi = a.lo + 1.0;
    return a;
}

std::vector<double> ticks(Axis const& a)
{
    std::vector<double> out;
    if (a.log)
    {
        int const n = static_cast<int>(a.hi - a.lo);
        int const step = std::max(1, n / 6);
        for (int k = static_cast<int>(a.lo); k <= static_cast<int>(a.hi); k += step)
            out.push_back(std::pow(10.0, k));
        return out;
    }
    for (int k = 0; k <= 5; ++k)
        out.push_back(a.lo + (a.hi - a.lo) * k / 5.0);
    return out;
}

}  // namespace

std::string render_svg(PlotSpec const& spec, std::vector<Series> const& series)
{
    std::vector<Series> clean;
    std::vector<double> xs, ys;
    for (auto const& s : series)
    {
        Series c{s.label, {}, {}, s.markers};
        for (std::size_t k = 0; k < std::min(s.x.size(), s.y.size()); ++k)
        {
            double const x = s.x[k], y = s.y[k];
            if (!std::isfinite(x) || !std::isfinite(y) || (spec.log_x && x <= 0.0)
                || (spec.log_y && y <= 0.0))
                continue;
            c.x.push_back(x);
            c.y.push_back(y);
        }
        xs.insert(xs.end(), c.x.begin(), c.x.end());
        ys.insert(ys.end(), c.y.begin(), c.y.end());
        clean.push_back(std::move(c));
    }
    Axis const ax = make_axis(xs, spec.log_x);
    Axis const ay = make_axis(ys, spec.log_y);
    double const pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + pw * ax.map(x); };
    auto py = [&](double y) { return kTop + ph * (1.0 - ay.map(y)); };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"24\" font-family=\"sans-serif\" "
      << "font-size=\"15\" text-anchor=\"middle\">" << escape(spec.title) << "</text>\n";
    o << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\""
      << ph << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (double t : ticks(ax))
    {
        double const x = px(t);
        o << "<line x1=\"" << num(x) << "\" y1=\"" << kTop << "\" x2=\"" << num(x) << "\" y2=\""
          << kTop + ph << "\" stroke=\"#ddd\"/>\n";
        o << "<text x=\"" << num(x) << "\" y=\"" << kTop + ph + 18
          << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" << tick(t)
          << "</text>\n";
    }
    for (double t : ticks(ay))
    {
        double const y = py(t);
        o << "<line x1=\"" << kLeft << "\" y1=\"" << num(y) << "\" x2=\"" << kLeft + pw
          << "\" y2=\"" << num(y) << "\" stroke=\"#ddd\"/>\n";
        o << "<text x=\"" << kLeft - 6 << "\" y=\"" << num(y + 4)
          << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" << tick(t)
          << "</text>\n";
    }
    o << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"" << kHeight - 16
      << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">"
      << escape(spec.x_label) << "</text>\n";
    o << "<text x=\"18\" y=\"" << num(kTop + ph / 2) << "\" font-family=\"sans-serif\" "
      << "font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 18 " << num(kTop + ph / 2)
      << ")\">" << escape(spec.y_label) << "</text>\n";

    for (std::size_t k = 0; k < clean.size(); ++k)
    {
        auto const& s = clean[k];
        char const* color = kColors[k % (sizeof kColors / sizeof *kColors)];
        if (s.x.size() >= 2)
        {
            o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
            for (std::size_t j = 0; j < s.x.size(); ++j)
                o << (j ? " " : "") << num(px(s.x[j])) << ',' << num(py(s.y[j]));
            o << "\"/>\n";
        }
        if (s.markers)
            for (std::size_t j = 0; j < s.x.size(); ++j)
                o << "<circle cx=\"" << num(px(s.x[j])) << "\" cy=\"" << num(py(s.y[j]))
                  << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        double const ly = kTop + 14 + 18.0 * static_cast<double>(k);
        o << "<line x1=\"" << kLeft + pw + 10 << "\" y1=\"" << num(ly - 4) << "\" x2=\""
          << kLeft + pw + 30 << "\" y2=\"" << num(ly - 4) << "\" stroke=\"" << color
          << "\" stroke-width=\"2\"/>\n";
        o << "<text x=\"" << kLeft + pw + 35 << "\" y=\"" << num(ly)
          << "\" font-family=\"sans-serif\" font-size=\"11\">" << escape(s.label) << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace hflm_cli
