#pragma once

#include <cmath>
#include <sstream>
#include <string>

#include "rbac/geom_core.hpp"

namespace rbac {

// Static picture of an instance and a solution. Coordinates are rounded to
// doubles; nothing here feeds back into a computation.
inline std::string render_svg(const Instance& inst, const Solution& sol) {
    double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    bool first = true;
    auto grow = [&](double x, double y) {
        if (first) {
            x0 = x1 = x;
            y0 = y1 = y;
            first = false;
        }
        x0 = std::min(x0, x), x1 = std::max(x1, x), y0 = std::min(y0, y), y1 = std::max(y1, y);
    };
    for (const auto& r : inst.reds) grow(r.p.x.get_d(), r.p.y.get_d());
    for (const auto& b : inst.blues) grow(b.p.x.get_d(), b.p.y.get_d());
    if (auto* c = std::get_if<CircAnnulus>(&sol.annulus)) {
        double r = std::sqrt(c->r_out_sq.get_d());
        grow(c->center.x.get_d() - r, c->center.y.get_d() - r);
        grow(c->center.x.get_d() + r, c->center.y.get_d() + r);
    }
    if (auto* a = std::get_if<RectAnnulus>(&sol.annulus)) {
        grow(a->outer.left.get_d(), a->outer.bottom.get_d());
        grow(a->outer.right.get_d(), a->outer.top.get_d());
    }
    double span = std::max({x1 - x0, y1 - y0, 1.0});
    const double size = 600, pad = 30;
    double k = (size - 2 * pad) / span;
    auto X = [&](double x) { return pad + (x - x0) * k; };
    auto Y = [&](double y) { return size - pad - (y - y0) * k; };
    double max_pen = 1;
    for (const auto& r : inst.reds) max_pen = std::max(max_pen, r.penalty.get_d());
    for (const auto& b : inst.blues) max_pen = std::max(max_pen, b.penalty.get_d());

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
      << size << ' ' << size << "\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    auto line = [&](double ax, double ay, double bx, double by, bool open) {
        o << "  <line x1=\"" << X(ax) << "\" y1=\"" << Y(ay) << "\" x2=\"" << X(bx) << "\" y2=\"" << Y(by)
          << "\" stroke=\"black\" stroke-width=\"1.5\"" << (open ? " stroke-dasharray=\"6 4\"" : "") << "/>\n";
    };
    std::visit(
        [&](const auto& a) {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, RectAnnulus>) {
                auto box = [&](const char* cls, const Rect& r, int base) {
                    double l = r.left.get_d(), rt = r.right.get_d(), b = r.bottom.get_d(), t = r.top.get_d();
                    o << "<g class=\"boundary " << cls << "\">\n";
                    line(l, b, l, t, a.side_open[base + 0]);
                    line(rt, b, rt, t, a.side_open[base + 1]);
                    line(l, b, rt, b, a.side_open[base + 2]);
                    line(l, t, rt, t, a.side_open[base + 3]);
                    o << "</g>\n";
                };
                box("outer", a.outer, OL);
                box("inner", a.inner, IL);
            } else if constexpr (std::is_same_v<T, IntervalPair>) {
                auto seg = [&](const char* cls, const Q& lo, const Q& hi, bool olo, bool ohi) {
                    double h = 0.05 * span;
                    o << "<g class=\"boundary " << cls << "\">\n";
                    line(lo.get_d(), -h, lo.get_d(), h, olo);
                    line(hi.get_d(), -h, hi.get_d(), h, ohi);
                    o << "</g>\n";
                };
                seg("outer", a.lo, a.ro, a.endpoint_open[0], a.endpoint_open[3]);
                seg("inner", a.li, a.ri, a.endpoint_open[1], a.endpoint_open[2]);
            } else if constexpr (std::is_same_v<T, CircAnnulus>) {
                for (auto [cls, r2] : {std::pair{"outer", &a.r_out_sq}, std::pair{"inner", &a.r_in_sq}})
                    o << "<circle class=\"boundary " << cls << "\" cx=\"" << X(a.center.x.get_d()) << "\" cy=\""
                      << Y(a.center.y.get_d()) << "\" r=\"" << std::sqrt(r2->get_d()) * k
                      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
            }
        },
        sol.annulus);
    auto dot = [&](const WPoint& w, const char* fill) {
        double r = 3 + 5 * w.penalty.get_d() / max_pen;
        o << "<circle cx=\"" << X(w.p.x.get_d()) << "\" cy=\"" << Y(w.p.y.get_d()) << "\" r=\"" << r << "\" fill=\""
          << fill << "\" fill-opacity=\"0.8\"/>\n";
    };
    for (const auto& r : inst.reds) dot(r, "#d62728");
    for (const auto& b : inst.blues) dot(b, "#1f77b4");
    o << "</svg>\n";
    return o.str();
}

}  // namespace rbac
