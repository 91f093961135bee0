#pragma once

// Output plumbing: every file starts with '#' metadata lines (version,
// command, functional, config, seed) followed by CSV or JSON.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ticontext/linalg.hpp"
#include "ticontext/optimizer.hpp"

#ifndef TICONTEXT_VERSION
#define TICONTEXT_VERSION "0.1.0"
#endif

namespace ticontext {

inline std::string version() { return TICONTEXT_VERSION; }

struct RunInfo {
  std::string command;
  std::string functional;
  std::vector<std::pair<std::string, std::string>> config;
  std::uint64_t seed = 0;

  RunInfo& set(const std::string& key, const std::string& value) {
    config.emplace_back(key, value);
    return *this;
  }
  RunInfo& set(const std::string& key, const char* value) { return set(key, std::string(value)); }
  RunInfo& set(const std::string& key, double value) {
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof buf, value);  // shortest round-trip form
    return set(key, std::string(buf, r.ptr));
  }
  template <class T>
  RunInfo& set(const std::string& key, const T& value) {
    std::ostringstream os;
    os << value;
    return set(key, os.str());
  }

  std::string config_line() const {
    std::string s;
    for (const auto& [k, v] : config) s += (s.empty() ? "" : " ") + k + "=" + v;
    return s;
  }
};

inline void write_header(std::ostream& os, const RunInfo& info, const char* comment = "#") {
  os << comment << " ticontext " << version() << '\n';
  os << comment << " command: " << info.command << '\n';
  if (!info.functional.empty()) os << comment << " functional: " << info.functional << '\n';
  os << comment << " config: " << info.config_line() << '\n';
  os << comment << " seed: " << info.seed << '\n';
}

inline std::string fmt(double v, int digits = 10) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

/// Columns k, e, grad_norm, inner_converged, w_1..w_p.
inline void write_trace_csv(std::ostream& os, const Trace& t) {
  std::size_t p = t.rows.empty() ? 0 : t.rows.front().w.size();
  os << "k,e,grad_norm,inner_converged";
  for (std::size_t i = 0; i < p; ++i) os << ",w" << i + 1;
  os << '\n';
  for (const auto& r : t.rows) {
    os << r.k << ',' << fmt(r.e, 15) << ',' << fmt(r.grad_norm, 6) << ',' << (r.inner_converged ? 1 : 0);
    for (double w : r.w) os << ',' << fmt(w, 12);
    os << '\n';
  }
}

/// Matrix with w2 values across the first row and w1 values down the first column.
inline void write_surface_csv(std::ostream& os, const Surface& s) {
  os << "w1\\w2";
  for (double w : s.w2) os << ',' << fmt(w, 8);
  os << '\n';
  for (std::size_t i = 0; i < s.w1.size(); ++i) {
    os << fmt(s.w1[i], 8);
    for (std::size_t j = 0; j < s.w2.size(); ++j) os << ',' << fmt(s.e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)), 12);
    os << '\n';
  }
}

inline nlohmann::json matrix_json(const CMat& m) {
  nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json r = nlohmann::json::array(), c = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      r.push_back(m(i, j).real());
      c.push_back(m(i, j).imag());
    }
    re.push_back(r);
    im.push_back(c);
  }
  return {{"re", re}, {"im", im}};
}

// ---------------------------------------------------------------------------
// SVG

struct Series {
  std::string label;
  std::vector<double> x, y;
  std::string color = "#1f77b4";
};

/// Minimal line plot with axis ranges from the data.
inline void write_line_svg(std::ostream& os, const std::vector<Series>& series, const std::string& title,
                           const std::string& xlabel, const std::string& ylabel) {
  const double W = 640, H = 420, L = 70, R = 20, T = 40, B = 50;
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& s : series)
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      x0 = std::min(x0, s.x[i]), x1 = std::max(x1, s.x[i]);
      y0 = std::min(y0, s.y[i]), y1 = std::max(y1, s.y[i]);
    }
  if (!(x1 > x0)) x1 = x0 + 1;
  if (!(y1 > y0)) y1 = y0 + 1;
  auto px = [&](double x) { return L + (x - x0) / (x1 - x0) * (W - L - R); };
  auto py = [&](double y) { return H - B - (y - y0) / (y1 - y0) * (H - T - B); };
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"22\" text-anchor=\"middle\">" << title << "</text>\n";
  os << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = x0 + (x1 - x0) * i / 4, yv = y0 + (y1 - y0) * i / 4;
    os << "<text x=\"" << px(xv) << "\" y=\"" << H - B + 16 << "\" text-anchor=\"middle\">" << fmt(xv, 4) << "</text>\n";
    os << "<text x=\"" << L - 6 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\">" << fmt(yv, 5) << "</text>\n";
  }
  os << "<text x=\"" << W / 2 << "\" y=\"" << H - 10 << "\" text-anchor=\"middle\">" << xlabel << "</text>\n";
  os << "<text x=\"16\" y=\"" << H / 2 << "\" transform=\"rotate(-90 16 " << H / 2 << ")\" text-anchor=\"middle\">" << ylabel << "</text>\n";
  double ly = T + 4;
  for (const auto& s : series) {
    os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) os << px(s.x[i]) << ',' << py(s.y[i]) << ' ';
    os << "\"/>\n";
    for (std::size_t i = 0; i < s.x.size(); ++i)
      os << "<circle cx=\"" << px(s.x[i]) << "\" cy=\"" << py(s.y[i]) << "\" r=\"2.5\" fill=\"" << s.color << "\"/>\n";
    os << "<text x=\"" << W - R - 4 << "\" y=\"" << ly << "\" text-anchor=\"end\" fill=\"" << s.color << "\">" << s.label << "</text>\n";
    ly += 16;
  }
  os << "</svg>\n";
}

}  // namespace ticontext
