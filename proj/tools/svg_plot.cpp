#include "svg_plot.hpp"

#include <cstdio>
#include <sstream>

namespace arctic::tools {

namespace {

std::string fmt(double v) {
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
    else out += c;
  }
  return out;
}

}  // namespace

SvgPlot::SvgPlot(int size_px, int margin_px) : size_(size_px), margin_(margin_px) {}

double SvgPlot::px(double x) const { return margin_ + x * (size_ - 2 * margin_); }
double SvgPlot::py(double y) const { return margin_ + y * (size_ - 2 * margin_); }

void SvgPlot::square() {
  body_.push_back("<rect x=\"" + fmt(px(0)) + "\" y=\"" + fmt(py(0)) + "\" width=\"" + fmt(px(1) - px(0)) +
                  "\" height=\"" + fmt(py(1) - py(0)) + "\" fill=\"none\" stroke=\"#000\" stroke-width=\"1.5\"/>");
}

void SvgPlot::polyline(const std::vector<std::pair<double, double>>& pts, const std::string& color, double width) {
  std::string d;
  for (const auto& [x, y] : pts) d += fmt(px(x)) + "," + fmt(py(y)) + " ";
  body_.push_back("<polyline points=\"" + d + "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" + fmt(width) + "\"/>");
}

void SvgPlot::dots(const std::vector<std::pair<double, double>>& pts, const std::string& color, double radius) {
  for (const auto& [x, y] : pts)
    body_.push_back("<circle cx=\"" + fmt(px(x)) + "\" cy=\"" + fmt(py(y)) + "\" r=\"" + fmt(radius) + "\" fill=\"" + color + "\"/>");
}

void SvgPlot::marker(double x, double y, const std::string& color, double radius) {
  body_.push_back("<circle cx=\"" + fmt(px(x)) + "\" cy=\"" + fmt(py(y)) + "\" r=\"" + fmt(radius) +
                  "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"2\"/>");
}

void SvgPlot::segments(const std::vector<std::pair<std::pair<double, double>, std::pair<double, double>>>& segs,
                       const std::string& color, double width) {
  if (segs.empty()) return;
  std::string d;
  for (const auto& [a, b] : segs)
    d += "M" + fmt(px(a.first)) + " " + fmt(py(a.second)) + "L" + fmt(px(b.first)) + " " + fmt(py(b.second));
  body_.push_back("<path d=\"" + d + "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" + fmt(width) + "\"/>");
}

void SvgPlot::label(double x, double y, const std::string& text, const std::string& color) {
  body_.push_back("<text x=\"" + fmt(px(x)) + "\" y=\"" + fmt(py(y)) + "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" +
                  color + "\">" + escape(text) + "</text>");
}

void SvgPlot::title(const std::string& text) {
  body_.push_back("<text x=\"" + fmt(size_ / 2.0) + "\" y=\"" + fmt(margin_ / 2.0 + 6) +
                  "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" + escape(text) + "</text>");
}

std::string SvgPlot::str() const {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size_ << "\" height=\"" << size_ << "\" viewBox=\"0 0 "
     << size_ << " " << size_ << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
  for (const auto& line : body_) os << line << "\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace arctic::tools
