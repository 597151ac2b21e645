//  Copyright 2026 The relind Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "internal.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <set>

namespace relind {

namespace {

constexpr double kScale = 120.0;  // pixels per unit
constexpr double kMargin = 40.0;

struct Bounds {
  double t0 = -1, t1 = 1, x0 = -1, x1 = 1;

  void add(const SpacetimePoint& p, double c) {
    t0 = std::min(t0, c * p.t);
    t1 = std::max(t1, c * p.t);
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
  }
};

class Canvas {
 public:
  explicit Canvas(Bounds b) : b_(b) {
    b_.t0 -= 0.5;
    b_.t1 += 0.5;
    b_.x0 -= 0.5;
    b_.x1 += 0.5;
  }

  double width() const { return (b_.x1 - b_.x0) * kScale + 2 * kMargin; }
  double height() const { return (b_.t1 - b_.t0) * kScale + 2 * kMargin; }
  double px(double x) const { return kMargin + (x - b_.x0) * kScale; }
  double py(double ct) const { return kMargin + (b_.t1 - ct) * kScale; }
  const Bounds& bounds() const { return b_; }

  void line(double x1, double ct1, double x2, double ct2, const std::string& style) {
    body_ += fmt::format("  <line x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" y2=\"{:.3f}\"{}/>\n", px(x1), py(ct1),
                         px(x2), py(ct2), style);
  }

  void raw(const std::string& s) { body_ += s; }

  std::string finish() const {
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += fmt::format("<!-- scale: {:.1f} px per unit; horizontal x, vertical ct; x in [{:.3f}, {:.3f}], ct in [{:.3f}, {:.3f}] -->\n",
                       kScale, b_.x0, b_.x1, b_.t0, b_.t1);
    out += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{:.0f}\" height=\"{:.0f}\" "
        "viewBox=\"0 0 {:.3f} {:.3f}\">\n",
        std::ceil(width()), std::ceil(height()), width(), height());
    out += fmt::format("  <rect x=\"0\" y=\"0\" width=\"{:.3f}\" height=\"{:.3f}\" fill=\"white\"/>\n", width(),
                       height());
    out += body_;
    out += "</svg>\n";
    return out;
  }

 private:
  Bounds b_;
  std::string body_;
};

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

// Segment of the line through (x, ct) with slope dx/dct = v/c, clipped to the canvas rows.
void draw_worldline(Canvas& cv, const SpacetimePoint& p, double beta, const std::string& style) {
  const auto& b = cv.bounds();
  cv.line(p.x + beta * (b.t0 - p.t), b.t0, p.x + beta * (b.t1 - p.t), b.t1, style);
}

}  // namespace

std::string render_diagram(const Scenario& s, const Report& r) {
  const double c = s.c;
  const Minkowski mk(c);
  Bounds bounds;
  std::vector<SpacetimePoint> events;
  if (r.contains("determinations")) {
    for (const auto& e : r.at("determinations")) {
      const auto& at = e.at("at");
      SpacetimePoint p(at.at("t").get<double>(), at.at("x").get<double>(), at.value("frame", std::string("rest")));
      p = to_rest(s, p);
      events.push_back(p);
      bounds.add(p, c);
    }
  }
  for (const auto& o : s.observers) bounds.add(to_rest(s, o.worldline.anchor), c);
  Canvas cv(bounds);
  const auto& b = cv.bounds();

  cv.raw("  <g id=\"axes\" stroke=\"black\" stroke-width=\"1\">\n");
  cv.line(b.x0, 0, b.x1, 0, "");
  cv.line(0, b.t0, 0, b.t1, "");
  cv.raw("  </g>\n");
  cv.raw(fmt::format("  <text x=\"{:.3f}\" y=\"{:.3f}\" font-size=\"12\">x</text>\n", cv.px(b.x1) - 12, cv.py(0) - 4));
  cv.raw(fmt::format("  <text x=\"{:.3f}\" y=\"{:.3f}\" font-size=\"12\">ct</text>\n", cv.px(0) + 4, cv.py(b.t1) + 12));

  // Determinate regions for each truth query, shaded under a common opacity.
  std::string regions;
  if (r.contains("determinations") && !events.empty()) {
    Realization real = realize(s, r.value("seed", s.seed));
    std::set<std::string> drawn;
    for (const auto& q : s.queries) {
      const auto* tq = std::get_if<TruthQuery>(&q.body);
      if (tq == nullptr || !drawn.insert(tq->proposition.to_string()).second) continue;
      std::vector<SpacetimePoint> apices;
      try {
        apices = determinate_region(real.determinations, tq->proposition, mk);
      } catch (const Error&) {
        continue;
      }
      for (const auto& a : apices) {
        const double ct = c * a.t;
        const double h = b.t1 - ct;
        if (h <= 0) continue;
        auto poly = fmt::format("    <polygon points=\"{:.3f},{:.3f} {:.3f},{:.3f} {:.3f},{:.3f}\"/>\n", cv.px(a.x),
                                cv.py(ct), cv.px(a.x - h), cv.py(b.t1), cv.px(a.x + h), cv.py(b.t1));
        if (drawn.insert(poly).second) regions += poly;
      }
    }
  }
  if (!regions.empty()) cv.raw("  <g id=\"determinate\" fill=\"#f2c94c\" opacity=\"0.25\">\n" + regions + "  </g>\n");

  for (const auto& f : s.frames) {
    const SpacetimePoint through = to_rest(s, f.through.value_or(SpacetimePoint(0, 0, "rest")));
    const double beta = f.frame.velocity / c;
    // Simultaneity line: ct - ct0 = beta (x - x0).
    const double ct_a = c * through.t + beta * (b.x0 - through.x);
    const double ct_b = c * through.t + beta * (b.x1 - through.x);
    cv.line(b.x0, ct_a, b.x1, ct_b, " stroke=\"#2f6fdf\" stroke-dasharray=\"2 4\" stroke-width=\"1\"");
    cv.raw(fmt::format("  <text x=\"{:.3f}\" y=\"{:.3f}\" font-size=\"10\" fill=\"#2f6fdf\">{}</text>\n",
                       cv.px(b.x1) - 60, cv.py(ct_b) - 4, escape(f.frame.label)));
  }

  for (const auto& o : s.observers) {
    const SpacetimePoint a = to_rest(s, o.worldline.anchor);
    const double beta = o.worldline.velocity / c;
    draw_worldline(cv, SpacetimePoint(c * a.t, a.x), beta, " stroke=\"#555555\" stroke-width=\"1.5\"");
    cv.raw(fmt::format("  <text x=\"{:.3f}\" y=\"{:.3f}\" font-size=\"11\">{}</text>\n",
                       cv.px(a.x + beta * (b.t0 + 0.2 - c * a.t)) + 4, cv.py(b.t0 + 0.2), escape(o.label)));
  }

  std::size_t i = 0;
  for (const auto& p : events) {
    const double ct = c * p.t;
    const double h = b.t1 - ct;
    if (h > 0) {
      cv.line(p.x, ct, p.x - h, b.t1, " stroke=\"#d64545\" stroke-width=\"1\"");
      cv.line(p.x, ct, p.x + h, b.t1, " stroke=\"#d64545\" stroke-width=\"1\"");
    }
    cv.raw(fmt::format("  <circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"3.5\" fill=\"black\"/>\n", cv.px(p.x), cv.py(ct)));
    const auto name = r.at("determinations")[i++].at("variable").get<std::string>();
    cv.raw(fmt::format("  <text x=\"{:.3f}\" y=\"{:.3f}\" font-size=\"11\">{}</text>\n", cv.px(p.x) + 5,
                       cv.py(ct) + 14, escape(name)));
  }
  return cv.finish();
}

}  // namespace relind
