#include "setopt/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "setopt/error.hpp"

namespace setopt {

namespace {

constexpr double kSize = 400, kMargin = 20, kLegend = 160;
const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else if (c == '"') out += "&quot;";
    else out += c;
  }
  return out;
}

}  // namespace

std::string plot_svg(const Workspace& ws, const NamedSets& sets) {
  if (ws.dim() != 2) throw Error(ErrorCode::DimensionUnsupported, "plots need a two-dimensional image space");

  Q lo[2] = {Q(0), Q(0)}, hi[2] = {Q(0), Q(0)};
  for (const auto& [name, s] : sets) {
    if (s.empty) continue;
    for (const auto& v : s.V)
      for (int i = 0; i < 2; ++i) {
        lo[i] = std::min(lo[i], v[i]);
        hi[i] = std::max(hi[i], v[i]);
      }
  }
  for (int i = 0; i < 2; ++i) {
    lo[i] = floor_q(lo[i]) - 1;
    hi[i] = -floor_q(-hi[i]) + 1;
  }
  const double x0 = to_double(lo[0]), x1 = to_double(hi[0]), y0 = to_double(lo[1]), y1 = to_double(hi[1]);
  auto px = [&](double x) { return kMargin + (x - x0) / (x1 - x0) * kSize; };
  auto py = [&](double y) { return kMargin + (y1 - y) / (y1 - y0) * kSize; };

  std::ostringstream os;
  const double width = kSize + 2 * kMargin + kLegend, height = kSize + 2 * kMargin;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
     << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n"
     << "<rect x=\"" << num(kMargin) << "\" y=\"" << num(kMargin) << "\" width=\"" << num(kSize) << "\" height=\""
     << num(kSize) << "\" fill=\"white\" stroke=\"black\"/>\n";
  if (x0 <= 0 && 0 <= x1)
    os << "<line x1=\"" << num(px(0)) << "\" y1=\"" << num(py(y0)) << "\" x2=\"" << num(px(0)) << "\" y2=\""
       << num(py(y1)) << "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
  if (y0 <= 0 && 0 <= y1)
    os << "<line x1=\"" << num(px(x0)) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(px(x1)) << "\" y2=\""
       << num(py(0)) << "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
  os << "<text x=\"" << num(kMargin) << "\" y=\"" << num(height - 4) << "\" font-size=\"10\">[" << to_string(lo[0])
     << ", " << to_string(hi[0]) << "] x [" << to_string(lo[1]) << ", " << to_string(hi[1]) << "]</text>\n";

  std::vector<Halfspace> box{{Vec{Q(1), Q(0)}, hi[0]}, {Vec{Q(-1), Q(0)}, -lo[0]},
                             {Vec{Q(0), Q(1)}, hi[1]}, {Vec{Q(0), Q(-1)}, -lo[1]}};
  std::size_t idx = 0;
  for (const auto& [name, s] : sets) {
    const char* color = kColors[idx % (sizeof kColors / sizeof *kColors)];
    const double ly = kMargin + 16 * static_cast<double>(idx) + 10;
    os << "<rect x=\"" << num(kSize + 2 * kMargin) << "\" y=\"" << num(ly - 8) << "\" width=\"10\" height=\"10\" fill=\""
       << color << "\" fill-opacity=\"" << (s.empty ? "0" : "0.35") << "\" stroke=\"" << color << "\"/>\n"
       << "<text x=\"" << num(kSize + 2 * kMargin + 14) << "\" y=\"" << num(ly) << "\" font-size=\"11\">"
       << escape(name) << (s.empty ? " (empty)" : "") << "</text>\n";
    ++idx;
    if (s.empty) continue;
    std::vector<Halfspace> H = s.H;
    H.insert(H.end(), box.begin(), box.end());
    PolyData p = poly_from_hrep(2, H);
    if (p.empty || p.V.empty()) continue;
    std::vector<std::pair<double, double>> pts;
    for (const auto& v : p.V) pts.emplace_back(to_double(v[0]), to_double(v[1]));
    double cx = 0, cy = 0;
    for (const auto& [x, y] : pts) cx += x, cy += y;
    cx /= static_cast<double>(pts.size());
    cy /= static_cast<double>(pts.size());
    std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
      return std::atan2(a.second - cy, a.first - cx) < std::atan2(b.second - cy, b.first - cx);
    });
    if (pts.size() == 1) {
      os << "<circle cx=\"" << num(px(pts[0].first)) << "\" cy=\"" << num(py(pts[0].second)) << "\" r=\"3\" fill=\""
         << color << "\"/>\n";
      continue;
    }
    os << (pts.size() == 2 ? "<polyline" : "<polygon") << " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << num(px(pts[i].first)) << "," << num(py(pts[i].second));
    os << "\" fill=\"" << (pts.size() == 2 ? "none" : color) << "\" fill-opacity=\"0.35\" stroke=\"" << color
       << "\" stroke-width=\"1.5\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace setopt
