/* Copyright (c) 2026, The specgap Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 the "License";
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "specgap/svg.hpp"

#include "specgap/error.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace specgap {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 170.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 60.0;

std::string escape(const std::string &text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string comment_safe(std::string text) {
    for (std::size_t pos; (pos = text.find("--")) != std::string::npos;)
        text.replace(pos, 2, "- -");
    return text;
}

struct Axes {
    double x_lo, x_hi, y_lo, y_hi; // log10 ranges

    double px(double n) const {
        return kLeft + (std::log10(n) - x_lo) / (x_hi - x_lo) * (kWidth - kLeft - kRight);
    }
    double py(double v) const {
        return kHeight - kBottom - (std::log10(v) - y_lo) / (y_hi - y_lo) * (kHeight - kTop - kBottom);
    }
};

std::string fmt(double v) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(2);
    s << v;
    return s.str();
}

} // namespace

std::string survey_svg(std::span<const SurveyLevel> levels, const std::optional<PowerLawFit> &fit,
                       const std::string &title, const Provenance &provenance) {
    double n_max = 1.0, v_min = INFINITY, v_max = -INFINITY;
    for (const auto &l : levels) {
        n_max = std::max(n_max, static_cast<double>(l.n));
        for (double v : {l.delta, l.diff}) {
            if (v > 0.0 && std::isfinite(v)) {
                v_min = std::min(v_min, v);
                v_max = std::max(v_max, v);
            }
        }
    }
    if (fit) {
        for (double n : {1.0, n_max}) {
            const double v = fit->alpha * std::pow(n, -fit->beta);
            if (v > 0.0 && std::isfinite(v)) {
                v_min = std::min(v_min, v);
                v_max = std::max(v_max, v);
            }
        }
    }
    if (!std::isfinite(v_min)) {
        v_min = 1.0;
        v_max = 10.0;
    }
    Axes ax{0.0, std::max(1.0, std::ceil(std::log10(n_max))), std::floor(std::log10(v_min)),
            std::ceil(std::log10(v_max))};
    if (ax.y_hi <= ax.y_lo)
        ax.y_hi = ax.y_lo + 1.0;

    const double plot_right = kWidth - kRight;
    const double plot_bottom = kHeight - kBottom;
    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    if (!provenance.empty()) {
        svg << "<!--\n";
        for (const auto &[k, v] : provenance)
            svg << "  " << comment_safe(k) << ": " << comment_safe(v) << '\n';
        svg << "-->\n";
    }
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << fmt(kWidth / 2) << "\" y=\"28\" text-anchor=\"middle\" font-size=\"14\">"
        << escape(title) << "</text>\n";

    // grid and decade ticks
    svg << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (double e = ax.x_lo; e <= ax.x_hi + 1e-9; e += 1.0) {
        const double x = ax.px(std::pow(10.0, e));
        svg << "  <line x1=\"" << fmt(x) << "\" y1=\"" << fmt(kTop) << "\" x2=\"" << fmt(x) << "\" y2=\""
            << fmt(plot_bottom) << "\"/>\n";
    }
    for (double e = ax.y_lo; e <= ax.y_hi + 1e-9; e += 1.0) {
        const double y = ax.py(std::pow(10.0, e));
        svg << "  <line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(plot_right)
            << "\" y2=\"" << fmt(y) << "\"/>\n";
    }
    svg << "</g>\n";
    svg << "<g text-anchor=\"middle\">\n";
    for (double e = ax.x_lo; e <= ax.x_hi + 1e-9; e += 1.0)
        svg << "  <text x=\"" << fmt(ax.px(std::pow(10.0, e))) << "\" y=\"" << fmt(plot_bottom + 18)
            << "\">10<tspan dy=\"-6\" font-size=\"9\">" << static_cast<int>(e) << "</tspan></text>\n";
    svg << "</g>\n<g text-anchor=\"end\">\n";
    for (double e = ax.y_lo; e <= ax.y_hi + 1e-9; e += 1.0)
        svg << "  <text x=\"" << fmt(kLeft - 8) << "\" y=\"" << fmt(ax.py(std::pow(10.0, e)) + 4)
            << "\">10<tspan dy=\"-6\" font-size=\"9\">" << static_cast<int>(e) << "</tspan></text>\n";
    svg << "</g>\n";
    svg << "<rect x=\"" << fmt(kLeft) << "\" y=\"" << fmt(kTop) << "\" width=\"" << fmt(plot_right - kLeft)
        << "\" height=\"" << fmt(plot_bottom - kTop) << "\" fill=\"none\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << fmt((kLeft + plot_right) / 2) << "\" y=\"" << fmt(kHeight - 15)
        << "\" text-anchor=\"middle\">N (number of realisations)</text>\n";

    if (fit) {
        svg << "<polyline fill=\"none\" stroke=\"red\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\" points=\"";
        const int steps = 32;
        for (int i = 0; i <= steps; ++i) {
            const double n = std::pow(10.0, std::log10(n_max) * i / steps);
            const double v = fit->alpha * std::pow(n, -fit->beta);
            if (v > 0.0 && std::isfinite(v))
                svg << fmt(ax.px(n)) << ',' << fmt(ax.py(v)) << ' ';
        }
        svg << "\"/>\n";
    }

    svg << "<g fill=\"none\" stroke=\"blue\" stroke-width=\"1.5\">\n";
    for (const auto &l : levels)
        if (l.delta > 0.0 && std::isfinite(l.delta))
            svg << "  <circle cx=\"" << fmt(ax.px(static_cast<double>(l.n))) << "\" cy=\""
                << fmt(ax.py(l.delta)) << "\" r=\"4\"/>\n";
    svg << "</g>\n<g fill=\"black\">\n";
    for (const auto &l : levels) {
        if (l.diff > 0.0 && std::isfinite(l.diff)) {
            const double x = ax.px(static_cast<double>(l.n));
            const double y = ax.py(l.diff);
            svg << "  <polygon points=\"" << fmt(x) << ',' << fmt(y - 5) << ' ' << fmt(x - 4.5) << ','
                << fmt(y + 3.5) << ' ' << fmt(x + 4.5) << ',' << fmt(y + 3.5) << "\"/>\n";
        }
    }
    svg << "</g>\n";

    // legend
    const double lx = plot_right + 15;
    svg << "<g>\n";
    svg << "  <circle cx=\"" << fmt(lx + 6) << "\" cy=\"" << fmt(kTop + 10)
        << "\" r=\"4\" fill=\"none\" stroke=\"blue\" stroke-width=\"1.5\"/>\n";
    svg << "  <text x=\"" << fmt(lx + 18) << "\" y=\"" << fmt(kTop + 14) << "\">min gap \xce\xb4_N</text>\n";
    svg << "  <polygon points=\"" << fmt(lx + 6) << ',' << fmt(kTop + 25) << ' ' << fmt(lx + 1.5) << ','
        << fmt(kTop + 33.5) << ' ' << fmt(lx + 10.5) << ',' << fmt(kTop + 33.5) << "\" fill=\"black\"/>\n";
    svg << "  <text x=\"" << fmt(lx + 18) << "\" y=\"" << fmt(kTop + 34) << "\">\xce\xb4_N - \xce\xb4_N*</text>\n";
    if (fit) {
        svg << "  <line x1=\"" << fmt(lx) << "\" y1=\"" << fmt(kTop + 50) << "\" x2=\"" << fmt(lx + 12)
            << "\" y2=\"" << fmt(kTop + 50) << "\" stroke=\"red\" stroke-width=\"1.5\" stroke-dasharray=\"4 2\"/>\n";
        std::ostringstream label;
        label.precision(3);
        label << fit->alpha << " N^-" << fit->beta;
        svg << "  <text x=\"" << fmt(lx + 18) << "\" y=\"" << fmt(kTop + 54) << "\">" << escape(label.str())
            << "</text>\n";
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

void write_survey_svg(std::span<const SurveyLevel> levels, const std::optional<PowerLawFit> &fit,
                      const std::string &title, const std::string &path, const Provenance &provenance) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    out << survey_svg(levels, fit, title, provenance);
    if (!out)
        throw IoError("failed writing '" + path + "'");
}

} // namespace specgap
