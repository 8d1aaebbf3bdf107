#include "hos/svg_plot.hpp"

#include <algorithm>
#include <fstream>

#include "hos/errors.hpp"

namespace hos {

void write_rate_svg(const std::string& path, const std::vector<RatePoint>& table,
                    int n_marker, const std::string& title) {
  constexpr int width = 640, height = 420;
  constexpr int left = 60, right = 20, top = 40, bottom = 50;
  const int plot_w = width - left - right;
  const int plot_h = height - top - bottom;

  int k_min = n_marker, k_max = n_marker;
  for (const RatePoint& p : table) {
    k_min = std::min(k_min, p.k);
    k_max = std::max(k_max, p.k);
  }
  if (k_max == k_min) k_max = k_min + 1;

  auto sx = [&](double k) { return left + plot_w * (k - k_min) / (k_max - k_min); };
  auto sy = [&](double rate) { return top + plot_h * (1.0 - rate); };

  std::ofstream svg(path);
  if (!svg) throw IoError("cannot open " + path);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">"
      << title << "</text>\n";

  // frame and horizontal gridlines at 0, 0.5, 1
  svg << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w << "\" height=\""
      << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (double r : {0.0, 0.5, 1.0}) {
    svg << "<line x1=\"" << left << "\" y1=\"" << sy(r) << "\" x2=\"" << left + plot_w
        << "\" y2=\"" << sy(r) << "\" stroke=\"#dddddd\"/>\n"
        << "<text x=\"" << left - 8 << "\" y=\"" << sy(r) + 4
        << "\" text-anchor=\"end\" font-size=\"11\">" << r << "</text>\n";
  }

  // vertical marker at K = N
  svg << "<line x1=\"" << sx(n_marker) << "\" y1=\"" << top << "\" x2=\"" << sx(n_marker)
      << "\" y2=\"" << top + plot_h << "\" stroke=\"red\"/>\n"
      << "<text x=\"" << sx(n_marker) << "\" y=\"" << top + plot_h + 28
      << "\" text-anchor=\"middle\" font-size=\"11\" fill=\"red\">K=N</text>\n";

  if (!table.empty()) {
    svg << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
    for (const RatePoint& p : table) svg << sx(p.k) << ',' << sy(p.rate) << ' ';
    svg << "\"/>\n";
    for (const RatePoint& p : table) {
      svg << "<circle cx=\"" << sx(p.k) << "\" cy=\"" << sy(p.rate)
          << "\" r=\"3\" fill=\"#1f77b4\"/>\n"
          << "<text x=\"" << sx(p.k) << "\" y=\"" << top + plot_h + 14
          << "\" text-anchor=\"middle\" font-size=\"10\">" << p.k << "</text>\n";
    }
  }

  svg << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 8
      << "\" text-anchor=\"middle\" font-size=\"12\">K</text>\n"
      << "<text x=\"14\" y=\"" << top + plot_h / 2
      << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 14 "
      << top + plot_h / 2 << ")\">success rate</text>\n</svg>\n";
  if (!svg.good()) throw IoError("write failed for " + path);
}

}  // namespace hos
