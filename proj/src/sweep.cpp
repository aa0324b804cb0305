#include "paulidyn/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace paulidyn {

std::string format_cell(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

void write_sweep_csv(std::ostream& out, const PauliChannel& ch, const DecayRates& rates,
                     double horizon, int rows) {
    if (rows < 1) throw std::invalid_argument("write_sweep_csv: need at least one row");
    const auto windows = pole_windows(rates.pole_times, horizon);
    const auto excised = [&windows](double t) {
        for (const auto& [lo, hi] : windows) {
            if (t >= lo && t <= hi) return true;
        }
        return false;
    };

    out << kSweepHeader << "\n";
    const double h = rows > 1 ? horizon / (rows - 1) : 0.0;
    for (int i = 0; i < rows; ++i) {
        const double t = i * h;
        const LambdaTriple l = ch.lambdas(t);
        const ProbabilityVector k = lambdas_to_probs(l);
        for (double v : {l.l1, l.l2, l.l3, k.k0, k.k1, k.k2, k.k3}) {
            if (!std::isfinite(v)) {
                throw std::runtime_error("write_sweep_csv: non-finite value at t = " +
                                         std::to_string(t));
            }
        }
        out << format_cell(t) << ',' << format_cell(l.l1) << ',' << format_cell(l.l2)
            << ',' << format_cell(l.l3) << ',' << format_cell(k.k0) << ','
            << format_cell(k.k1) << ',' << format_cell(k.k2) << ',' << format_cell(k.k3);
        if (excised(t)) {
            out << ",,,";
        } else {
            for (int axis = 1; axis <= 3; ++axis) {
                const double g = rates(axis, t);
                if (!std::isfinite(g)) {
                    throw std::runtime_error("write_sweep_csv: non-finite rate at t = " +
                                             std::to_string(t));
                }
                out << ',' << format_cell(g);
            }
        }
        out << "\n";
    }
}

void write_lambda_svg(std::ostream& out, const PauliChannel& ch, double horizon,
                      int samples) {
    const int width = 720, height = 420, margin = 45;
    double lo = 0.0, hi = 1.0;
    std::vector<std::array<double, 3>> values(samples);
    for (int i = 0; i < samples; ++i) {
        const double t = horizon * i / (samples - 1);
        const LambdaTriple l = ch.lambdas(t);
        values[i] = {l.l1, l.l2, l.l3};
        for (double v : values[i]) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    const double span = hi - lo > 0 ? hi - lo : 1.0;
    auto x_of = [&](int i) {
        return margin + (width - 2.0 * margin) * i / (samples - 1);
    };
    auto y_of = [&](double v) {
        return height - margin - (height - 2.0 * margin) * (v - lo) / span;
    };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // Axis frame and the zero line.
    out << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\""
        << width - 2 * margin << "\" height=\"" << height - 2 * margin
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    if (lo < 0.0 && hi > 0.0) {
        out << "<line x1=\"" << margin << "\" y1=\"" << y_of(0.0) << "\" x2=\""
            << width - margin << "\" y2=\"" << y_of(0.0)
            << "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
    }
    const char* colors[3] = {"#c0392b", "#27ae60", "#2980b9"};
    for (int j = 0; j < 3; ++j) {
        out << "<polyline fill=\"none\" stroke=\"" << colors[j] << "\" points=\"";
        for (int i = 0; i < samples; ++i) {
            out << x_of(i) << ',' << y_of(values[i][j]) << ' ';
        }
        out << "\"/>\n";
        out << "<text x=\"" << width - margin + 4 << "\" y=\""
            << y_of(values[samples - 1][j]) << "\" font-size=\"12\" fill=\"" << colors[j]
            << "\">l" << j + 1 << "</text>\n";
    }
    out << "<text x=\"" << margin << "\" y=\"" << height - 10
        << "\" font-size=\"12\">t in [0, " << format_cell(horizon) << "], "
        << ch.label() << "</text>\n";
    out << "</svg>\n";
}

}  // namespace paulidyn
