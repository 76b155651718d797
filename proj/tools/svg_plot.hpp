#pragma once

#include <string>
#include <utility>
#include <vector>

namespace arctic::tools {

// Static plot of the unit square with x to the right and y downwards, so the
// corner (0, 0) is the north-west one.
class SvgPlot {
 public:
  explicit SvgPlot(int size_px = 600, int margin_px = 40);

  void square();
  void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& color, double width = 2.0);
  void dots(const std::vector<std::pair<double, double>>& pts, const std::string& color, double radius = 2.0);
  void marker(double x, double y, const std::string& color, double radius = 5.0);
  void segments(const std::vector<std::pair<std::pair<double, double>, std::pair<double, double>>>& segs,
                const std::string& color, double width = 1.2);
  void label(double x, double y, const std::string& text, const std::string& color = "#333");
  void title(const std::string& text);

  std::string str() const;

 private:
  double px(double x) const;
  double py(double y) const;

  int size_;
  int margin_;
  std::vector<std::string> body_;
};

// Zero set of f on [0,1]² by marching squares on an n×n grid.
template <typename F>
std::vector<std::pair<std::pair<double, double>, std::pair<double, double>>> contour_zero(F f, int n = 240) {
  std::vector<std::vector<double>> v(static_cast<size_t>(n) + 1, std::vector<double>(static_cast<size_t>(n) + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) v[i][j] = f(static_cast<double>(i) / n, static_cast<double>(j) / n);
  std::vector<std::pair<std::pair<double, double>, std::pair<double, double>>> segs;
  auto cross = [&](double xa, double ya, double fa, double xb, double yb, double fb) {
    double s = fa / (fa - fb);
    return std::make_pair(xa + s * (xb - xa), ya + s * (yb - ya));
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double x0 = static_cast<double>(i) / n, x1 = static_cast<double>(i + 1) / n;
      double y0 = static_cast<double>(j) / n, y1 = static_cast<double>(j + 1) / n;
      double f00 = v[i][j], f10 = v[i + 1][j], f11 = v[i + 1][j + 1], f01 = v[i][j + 1];
      std::vector<std::pair<double, double>> hits;
      if ((f00 < 0) != (f10 < 0)) hits.push_back(cross(x0, y0, f00, x1, y0, f10));
      if ((f10 < 0) != (f11 < 0)) hits.push_back(cross(x1, y0, f10, x1, y1, f11));
      if ((f11 < 0) != (f01 < 0)) hits.push_back(cross(x1, y1, f11, x0, y1, f01));
      if ((f01 < 0) != (f00 < 0)) hits.push_back(cross(x0, y1, f01, x0, y0, f00));
      if (hits.size() >= 2) segs.push_back({hits[0], hits[1]});
      if (hits.size() == 4) segs.push_back({hits[2], hits[3]});
    }
  return segs;
}

}  // namespace arctic::tools
