// Copyright 2026 The leakc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "plot.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace leakc_cli {
namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                "#9467bd", "#ff7f0e", "#8c564b"};

std::string Escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string Tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

class Canvas {
 public:
  Canvas(double x_lo, double x_hi, double y_lo, double y_hi)
      : x_lo_(x_lo), x_hi_(x_hi), y_lo_(y_lo), y_hi_(y_hi) {
    if (x_hi_ <= x_lo_) x_hi_ = x_lo_ + 1.0;
    if (y_hi_ <= y_lo_) y_hi_ = y_lo_ + 1.0;
  }

  double X(double v) const {
    return kLeft + (v - x_lo_) / (x_hi_ - x_lo_) * (kWidth - kLeft - kRight);
  }
  double Y(double v) const {
    return kHeight - kBottom -
           (v - y_lo_) / (y_hi_ - y_lo_) * (kHeight - kTop - kBottom);
  }

  void Begin(const std::string& title) {
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
         << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
         << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
         << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
         << "<text x=\"" << Num(kWidth / 2) << "\" y=\"22\" "
         << "text-anchor=\"middle\" font-size=\"14\">" << Escape(title)
         << "</text>\n"
         << "<rect x=\"" << Num(kLeft) << "\" y=\"" << Num(kTop)
         << "\" width=\"" << Num(kWidth - kLeft - kRight) << "\" height=\""
         << Num(kHeight - kTop - kBottom)
         << "\" fill=\"none\" stroke=\"black\"/>\n";
  }

  void XTick(double v, const std::string& label) {
    out_ << "<line x1=\"" << Num(X(v)) << "\" y1=\"" << Num(kHeight - kBottom)
         << "\" x2=\"" << Num(X(v)) << "\" y2=\"" << Num(kHeight - kBottom + 5)
         << "\" stroke=\"black\"/>\n"
         << "<text x=\"" << Num(X(v)) << "\" y=\""
         << Num(kHeight - kBottom + 18) << "\" text-anchor=\"middle\">"
         << Escape(label) << "</text>\n";
  }

  void YTick(double v, const std::string& label) {
    out_ << "<line x1=\"" << Num(kLeft - 5) << "\" y1=\"" << Num(Y(v))
         << "\" x2=\"" << Num(kLeft) << "\" y2=\"" << Num(Y(v))
         << "\" stroke=\"black\"/>\n"
         << "<text x=\"" << Num(kLeft - 8) << "\" y=\"" << Num(Y(v) + 4)
         << "\" text-anchor=\"end\">" << Escape(label) << "</text>\n";
  }

  void AxisLabels(const std::string& x_label, const std::string& y_label) {
    out_ << "<text x=\"" << Num((kLeft + kWidth - kRight) / 2) << "\" y=\""
         << Num(kHeight - 12) << "\" text-anchor=\"middle\">" << Escape(x_label)
         << "</text>\n"
         << "<text transform=\"translate(16,"
         << Num((kTop + kHeight - kBottom) / 2)
         << ") rotate(-90)\" text-anchor=\"middle\">" << Escape(y_label)
         << "</text>\n";
  }

  void Polyline(const std::vector<std::pair<double, double>>& pts,
                const char* color, const char* dash = nullptr) {
    out_ << "<polyline fill=\"none\" stroke=\"" << color
         << "\" stroke-width=\"1.5\"";
    if (dash != nullptr) out_ << " stroke-dasharray=\"" << dash << '"';
    out_ << " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      out_ << (i ? " " : "") << Num(X(pts[i].first)) << ','
           << Num(Y(pts[i].second));
    }
    out_ << "\"/>\n";
  }

  void Dot(double x, double y, const char* color) {
    out_ << "<circle cx=\"" << Num(X(x)) << "\" cy=\"" << Num(Y(y))
         << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
  }

  void Legend(std::size_t row, const std::string& name, const char* color) {
    const double y = kTop + 16 + 16 * static_cast<double>(row);
    out_ << "<line x1=\"" << Num(kWidth - kRight - 170) << "\" y1=\""
         << Num(y - 4) << "\" x2=\"" << Num(kWidth - kRight - 150) << "\" y2=\""
         << Num(y - 4) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n"
         << "<text x=\"" << Num(kWidth - kRight - 145) << "\" y=\"" << Num(y)
         << "\">" << Escape(name) << "</text>\n";
  }

  std::string End() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  double x_lo_, x_hi_, y_lo_, y_hi_;
  std::ostringstream out_;
};

}  // namespace

std::string FormatDouble(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, r.ptr);
}

std::string StepCdfSvg(const std::string& title, const std::string& x_label,
                       const std::vector<StepSeries>& series) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const StepSeries& s : series) {
    for (const auto& [v, c] : s.points) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (!(lo <= hi)) lo = hi = 0.0;
  const double pad = std::max(0.05 * (hi - lo), 0.05);
  Canvas canvas(lo - pad, hi + pad, 0.0, 1.0);
  canvas.Begin(title);
  for (int k = 0; k <= 4; ++k) {
    const double v = lo - pad + (hi - lo + 2 * pad) * k / 4.0;
    canvas.XTick(v, Tick(v));
    canvas.YTick(k / 4.0, Tick(k / 4.0));
  }
  canvas.AxisLabels(x_label, "CDF");
  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % std::size(kPalette)];
    std::vector<std::pair<double, double>> pts{{lo - pad, 0.0}};
    double level = 0.0;
    for (const auto& [v, c] : series[i].points) {
      pts.emplace_back(v, level);
      pts.emplace_back(v, c);
      level = c;
    }
    pts.emplace_back(hi + pad, level);
    canvas.Polyline(pts, color);
    canvas.Legend(i, series[i].name, color);
  }
  return canvas.End();
}

std::string RateSvg(const RatePlot& plot) {
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < plot.n.size(); ++i) {
    if (plot.gap[i] > 0.0 && std::isfinite(plot.gap[i])) {
      pts.emplace_back(plot.n[i], std::log10(plot.gap[i]));
    }
  }
  double x_lo = plot.n.empty() ? 0.0 : plot.n.front();
  double x_hi = plot.n.empty() ? 1.0 : plot.n.back();
  double y_lo = 0.0;
  double y_hi = 1.0;
  if (!pts.empty()) {
    y_lo = y_hi = pts.front().second;
    for (const auto& [x, y] : pts) {
      y_lo = std::min(y_lo, y);
      y_hi = std::max(y_hi, y);
    }
  }
  y_lo = std::floor(y_lo);
  y_hi = std::ceil(y_hi);
  if (y_hi <= y_lo) y_hi = y_lo + 1.0;
  Canvas canvas(x_lo, x_hi, y_lo, y_hi);
  canvas.Begin(plot.title);
  for (int k = 0; k <= 4; ++k) {
    const double v = x_lo + (x_hi - x_lo) * k / 4.0;
    canvas.XTick(v, Tick(v));
  }
  const int step = std::max(1, static_cast<int>((y_hi - y_lo) / 8.0 + 0.999));
  for (int e = static_cast<int>(y_lo); e <= static_cast<int>(y_hi); e += step) {
    canvas.YTick(e, "1e" + std::to_string(e));
  }
  canvas.AxisLabels("n", "gap (bits, log scale)");
  canvas.Polyline(pts, kPalette[0]);
  for (const auto& [x, y] : pts) canvas.Dot(x, y, kPalette[0]);
  if (plot.window_hi > plot.window_lo) {
    constexpr double kLog10Of2 = 0.30102999566398119521;
    auto fitted = [&](double n) {
      return (plot.intercept + plot.slope * n) * kLog10Of2;
    };
    canvas.Polyline({{plot.window_lo, fitted(plot.window_lo)},
                     {plot.window_hi, fitted(plot.window_hi)}},
                    kPalette[1], "6,4");
  }
  canvas.Legend(0, "gap", kPalette[0]);
  canvas.Legend(1, "fit", kPalette[1]);
  return canvas.End();
}

}  // namespace leakc_cli
