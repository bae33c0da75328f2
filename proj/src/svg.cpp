#include "sempat/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "sempat/errors.hpp"

namespace sempat {

namespace {

std::string fmt(double v, int prec = 1) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*f", prec, v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

const char* kSeriesColors[] = {"#c0392b", "#2471a3", "#1e8449", "#7d3c98"};

std::string svg_open(int w, int h) {
  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) +
       "\" height=\"" + std::to_string(h) + "\" viewBox=\"0 0 " + std::to_string(w) + " " +
       std::to_string(h) + "\">\n";
  s += "<rect width=\"" + std::to_string(w) + "\" height=\"" + std::to_string(h) +
       "\" fill=\"white\"/>\n";
  return s;
}

std::string text(double x, double y, const std::string& s, int size,
                 const std::string& anchor = "start", const std::string& extra = "") {
  return "<text x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" font-family=\"sans-serif\" font-size=\"" +
         std::to_string(size) + "\" text-anchor=\"" + anchor + "\"" + extra + ">" + escape(s) +
         "</text>\n";
}

}  // namespace

std::string render_similarity_plot(const SimilarityMatrix& sim) {
  const int n = int(sim.labels.size());
  const int cell = 34;
  const int margin = 110;
  const int w = margin + n * cell + 20;
  const int h = margin + n * cell + 20;
  std::string s = svg_open(w, h);
  s += text(double(w) / 2, 24, "Cosine similarity of word sets", 15, "middle");

  for (int i = 0; i < n; i++) {
    const double cx = margin + (i + 0.5) * cell;
    s += text(cx, margin - 8, sim.labels[size_t(i)], 9, "end",
              " transform=\"rotate(-45 " + fmt(cx) + " " + fmt(margin - 8.0) + ")\"");
    s += text(margin - 8, margin + (i + 0.5) * cell + 3, sim.labels[size_t(i)], 9, "end");
  }
  for (int i = 0; i < n; i++) {
    for (int j = 0; j < n; j++) {
      const double v = sim.values[size_t(i)][size_t(j)];
      const double cx = margin + (j + 0.5) * cell;
      const double cy = margin + (i + 0.5) * cell;
      const double r = std::max(0.0, v) * (cell * 0.45);
      s += "<rect x=\"" + fmt(margin + j * double(cell)) + "\" y=\"" +
           fmt(margin + i * double(cell)) + "\" width=\"" + std::to_string(cell) +
           "\" height=\"" + std::to_string(cell) + "\" fill=\"none\" stroke=\"#ddd\"/>\n";
      s += "<circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) + "\" r=\"" + fmt(r, 2) +
           "\" fill=\"#2471a3\" fill-opacity=\"" + fmt(0.25 + 0.7 * std::max(0.0, v), 2) +
           "\"/>\n";
      if (i == j) continue;
      s += text(cx, cy + 3, fmt(v, 2), 7, "middle", " fill=\"#333\"");
    }
  }
  s += "</svg>\n";
  return s;
}

std::string render_silhouette_plot(const SilhouetteReport& report, const KMeansModel& model) {
  const int n = int(report.widths.size());
  const int bar = 20;
  const int gap = 4;
  const int left = 150;
  const int top = 50;
  const int plot_w = 420;
  const int h = top + n * (bar + gap) + int(model.k) * 18 + 40;
  const int w = left + plot_w + 80;
  std::string s = svg_open(w, h);
  s += text(double(w) / 2, 24, "Silhouette plot (k=" + std::to_string(model.k) + ")", 15,
            "middle");

  // order points by cluster, then width descending inside the cluster
  std::vector<size_t> order(size_t(n), 0);
  for (size_t i = 0; i < order.size(); i++) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (model.assignments[a] != model.assignments[b])
      return model.assignments[a] < model.assignments[b];
    if (report.widths[a] != report.widths[b]) return report.widths[a] > report.widths[b];
    return report.labels[a] < report.labels[b];
  });

  const double x0 = left;                 // silhouette 0
  const double scale = plot_w / 2.0;      // widths live in [-1, 1]
  s += "<line x1=\"" + fmt(x0) + "\" y1=\"" + fmt(double(top - 10)) + "\" x2=\"" + fmt(x0) +
       "\" y2=\"" + fmt(double(top + n * (bar + gap))) + "\" stroke=\"#999\"/>\n";

  double y = top;
  int prev_cluster = -1;
  for (size_t idx : order) {
    const int c = model.assignments[idx];
    if (c != prev_cluster) {
      if (prev_cluster >= 0) y += 10;
      s += text(left - 140, y + bar - 6,
                "cluster " + std::to_string(c + 1) + "  (mean " +
                    fmt(report.cluster_means[size_t(c)], 2) + ")",
                11, "start", " fill=\"#555\"");
      y += 18;
      prev_cluster = c;
    }
    const double wdt = report.widths[idx] * scale;
    const double bx = wdt >= 0 ? x0 : x0 + wdt;
    s += "<rect x=\"" + fmt(bx) + "\" y=\"" + fmt(y) + "\" width=\"" + fmt(std::abs(wdt), 2) +
         "\" height=\"" + std::to_string(bar) + "\" fill=\"" +
         kSeriesColors[size_t(c) % 4] + "\" fill-opacity=\"0.75\"/>\n";
    s += text(left - 8, y + bar - 6, report.labels[idx], 10, "end");
    s += text(x0 + wdt + (wdt >= 0 ? 5 : -5), y + bar - 6, fmt(report.widths[idx], 2), 9,
              wdt >= 0 ? "start" : "end", " fill=\"#333\"");
    y += bar + gap;
  }
  s += text(left, y + 24, "mean width " + fmt(report.mean_width, 3), 11);
  s += "</svg>\n";
  return s;
}

std::string render_elbow_plot(const std::vector<ElbowSeries>& series) {
  const int w = 560, h = 400;
  const int left = 70, right = 30, top = 50, bottom = 60;
  const double plot_w = w - left - right;
  const double plot_h = h - top - bottom;
  std::string s = svg_open(w, h);
  s += text(double(w) / 2, 24, "Total within-cluster sum of squares by k", 15, "middle");

  size_t kmin = SIZE_MAX, kmax = 0;
  double wmax = 0.0;
  for (const auto& sr : series) {
    for (size_t k : sr.k_values) {
      kmin = std::min(kmin, k);
      kmax = std::max(kmax, k);
    }
    for (double v : sr.wcss) wmax = std::max(wmax, v);
  }
  if (series.empty() || kmax <= kmin) throw std::invalid_argument("elbow plot needs a k range");
  if (wmax <= 0.0) wmax = 1.0;

  auto sx = [&](double k) { return left + (k - double(kmin)) / double(kmax - kmin) * plot_w; };
  auto sy = [&](double v) { return top + (1.0 - v / wmax) * plot_h; };

  // axes and ticks
  s += "<line x1=\"" + fmt(double(left)) + "\" y1=\"" + fmt(double(top)) + "\" x2=\"" +
       fmt(double(left)) + "\" y2=\"" + fmt(double(top) + plot_h) + "\" stroke=\"#333\"/>\n";
  s += "<line x1=\"" + fmt(double(left)) + "\" y1=\"" + fmt(double(top) + plot_h) + "\" x2=\"" +
       fmt(double(left) + plot_w) + "\" y2=\"" + fmt(double(top) + plot_h) +
       "\" stroke=\"#333\"/>\n";
  for (size_t k = kmin; k <= kmax; k++) {
    s += text(sx(double(k)), top + plot_h + 18, std::to_string(k), 11, "middle");
    s += "<line x1=\"" + fmt(sx(double(k))) + "\" y1=\"" + fmt(top + plot_h) + "\" x2=\"" +
         fmt(sx(double(k))) + "\" y2=\"" + fmt(top + plot_h + 4) + "\" stroke=\"#333\"/>\n";
  }
  for (int t = 0; t <= 4; t++) {
    const double v = wmax * t / 4.0;
    s += text(left - 8, sy(v) + 4, fmt(v, 2), 10, "end");
    s += "<line x1=\"" + fmt(double(left) - 4) + "\" y1=\"" + fmt(sy(v)) + "\" x2=\"" +
         fmt(double(left)) + "\" y2=\"" + fmt(sy(v)) + "\" stroke=\"#333\"/>\n";
  }
  s += text(left + plot_w / 2, double(h) - 12, "number of clusters k", 12, "middle");

  for (size_t si = 0; si < series.size(); si++) {
    const auto& sr = series[si];
    const char* color = kSeriesColors[si % 4];
    std::string points;
    for (size_t i = 0; i < sr.k_values.size(); i++) {
      points += fmt(sx(double(sr.k_values[i])), 2) + "," + fmt(sy(sr.wcss[i]), 2) + " ";
    }
    s += "<polyline points=\"" + points + "\" fill=\"none\" stroke=\"" + color +
         "\" stroke-width=\"2\"/>\n";
    for (size_t i = 0; i < sr.k_values.size(); i++) {
      s += "<circle cx=\"" + fmt(sx(double(sr.k_values[i])), 2) + "\" cy=\"" +
           fmt(sy(sr.wcss[i]), 2) + "\" r=\"3\" fill=\"" + color + "\"/>\n";
      if (sr.k_values[i] == sr.selected) {
        s += "<circle cx=\"" + fmt(sx(double(sr.k_values[i])), 2) + "\" cy=\"" +
             fmt(sy(sr.wcss[i]), 2) + "\" r=\"7\" fill=\"none\" stroke=\"" + color +
             "\" stroke-width=\"2\"/>\n";
      }
    }
    s += text(left + plot_w - 8, top + 16 + 16 * double(si), sr.label, 11, "end",
              std::string(" fill=\"") + color + "\"");
  }
  s += "</svg>\n";
  return s;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open output file: " + path);
  out << content;
}

}  // namespace sempat
