#pragma once

#include "rbac/annulus_rect_2d.hpp"

namespace rbac {

// Rectangular annuli whose rectangles are both centred on the line y = line_y.
// Always penalized.
inline Solution solve_restricted(const Instance& inst, RectShape shape, const Q& line_y) {
    if (inst.dim != 2) throw GeometryError("solve_restricted needs a 2D instance");
    Variant var = shape == RectShape::nnc ? Variant::restricted_nnc
                  : shape == RectShape::nc ? Variant::restricted_nc
                                           : Variant::restricted_uniform;
    if (inst.n() + inst.m() == 0) return rect_detail::finish(inst, var, Mode::penalized, EmptyAnnulus{}, 0);
    pat::check_size(inst);
    AxisCoords ax(xs_of(inst)), ay(ys_of(inst));
    RectKinds kinds = restricted_kinds(shape, line_y);
    rect_detail::Groups g;
    switch (shape) {
        case RectShape::nnc: g.push_back({pat::free_axis(ax), pat::symmetric_axis(ay, line_y)}); break;
        case RectShape::nc: g.push_back({pat::concentric_axis(ax), pat::symmetric_axis(ay, line_y)}); break;
        case RectShape::uniform: {
            std::vector<Q> crit;
            pat::add_pair_widths(ax.cs, crit);
            std::vector<Q> ds;
            for (const auto& c : ay.cs) ds.push_back(abs(c - line_y));
            for (std::size_t i = 0; i < ds.size(); ++i) {
                crit.push_back(ds[i]);
                for (std::size_t j = i + 1; j < ds.size(); ++j) crit.push_back(abs(ds[i] - ds[j]));
            }
            Q span = std::max<Q>(pat::coordinate_span(ax, ay), abs(line_y - ay.cs.front()) + abs(line_y - ay.cs.back()));
            for (const Q& w : pat::width_samples(crit)) {
                Q far = span + 2 * w + 1;
                g.push_back({pat::uniform_axis(ax, w, far), pat::symmetric_uniform_axis(ay, line_y, w, far)});
            }
            break;
        }
    }
    return pat::run_search(inst, Mode::penalized, var, ax, ay, kinds, g);
}

}  // namespace rbac
