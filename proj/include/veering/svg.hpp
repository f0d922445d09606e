#pragma once

#include <sstream>
#include <string>

#include "veering/pipeline.hpp"

namespace veering {

// Schematic cusp view: one group per torus, ladders side by side in their
// cyclic order, each ladder a vertical strip of unit triangles with hinges
// shaded and the bounding poles stroked in their color. Layout only; the one
// contract is a polygon per cusp triangle, grouped per ladder.

inline std::string cusp_svg(const Analysis& a) {
    const double cell_w = 64, cell_h = 36, gap = 28, margin = 24;
    std::ostringstream out;
    double total_w = 0, total_h = 0;
    std::vector<double> torus_y;
    for (const CuspTorus& torus : a.cusp.components) {
        const std::vector<int>& order = a.ladders.ladder_order[static_cast<std::size_t>(torus.id)];
        int max_len = 0;
        for (int lid : order)
            max_len = std::max(max_len, a.ladders.ladders[static_cast<std::size_t>(lid)].size());
        torus_y.push_back(total_h);
        total_h += margin + cell_h * max_len + 40;
        total_w = std::max(total_w, margin * 2 + (cell_w + gap) * static_cast<double>(order.size()));
    }
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total_w << "\" height=\""
        << total_h << "\" font-family=\"monospace\" font-size=\"10\">\n";
    for (const CuspTorus& torus : a.cusp.components) {
        const std::vector<int>& order = a.ladders.ladder_order[static_cast<std::size_t>(torus.id)];
        double oy = torus_y[static_cast<std::size_t>(torus.id)] + 16;
        out << "<g id=\"torus-" << torus.id << "\">\n";
        out << "<text x=\"" << margin << "\" y=\"" << oy << "\">torus " << torus.id << "</text>\n";
        for (std::size_t pos = 0; pos < order.size(); ++pos) {
            const Ladder& ld = a.ladders.ladders[static_cast<std::size_t>(order[pos])];
            double x0 = margin + (cell_w + gap) * static_cast<double>(pos);
            double x1 = x0 + cell_w;
            out << "<g id=\"ladder-" << ld.id << "\">\n";
            out << "<text x=\"" << x0 << "\" y=\"" << oy + 12 << "\">L" << ld.id
                << (ld.has_orientation ? (ld.ascending ? " asc" : " desc") : "") << "</text>\n";
            const char* ca = a.ladders.poles[static_cast<std::size_t>(ld.pole_a)].color == Color::red
                                 ? "#c1272d"
                                 : "#1f4e9c";
            const char* cb = a.ladders.poles[static_cast<std::size_t>(ld.pole_b)].color == Color::red
                                 ? "#c1272d"
                                 : "#1f4e9c";
            double y_top = oy + 18;
            double y_bot = y_top + cell_h * ld.size();
            out << "<line x1=\"" << x0 << "\" y1=\"" << y_top << "\" x2=\"" << x0 << "\" y2=\""
                << y_bot << "\" stroke=\"" << ca << "\" stroke-width=\"3\"/>\n";
            out << "<line x1=\"" << x1 << "\" y1=\"" << y_top << "\" x2=\"" << x1 << "\" y2=\""
                << y_bot << "\" stroke=\"" << cb << "\" stroke-width=\"3\"/>\n";
            for (int i = 0; i < ld.size(); ++i) {
                int id = ld.strip[static_cast<std::size_t>(i)];
                // Strip order runs wide-ward; draw it bottom up.
                double yb = y_bot - cell_h * i;
                double yt = yb - cell_h;
                bool hinge = a.veering.hinge[static_cast<std::size_t>(a.cusp.tet_of(id))];
                // Apex on the pole carrying the wide corner.
                int kp = a.ladders.pole_pos[static_cast<std::size_t>(id)];
                int side = a.cusp.side_class_of[static_cast<std::size_t>(id)][static_cast<std::size_t>(kp)];
                const CuspSide& s = a.cusp.sides[static_cast<std::size_t>(side)];
                int pole = a.ladders.pole_of_vertex[static_cast<std::size_t>(
                    a.cusp.vertex_at(s.tri0, CuspComplex::side_corner_pos(s.k0)[0]))];
                bool apex_left = pole == ld.pole_a;
                double ax = apex_left ? x0 : x1;
                double bx = apex_left ? x1 : x0;
                out << "<polygon points=\"" << ax << "," << yt << " " << ax << "," << yb << " "
                    << bx << "," << (yt + yb) / 2 << "\" fill=\""
                    << (hinge ? "#bfbfbf" : "#ffffff") << "\" stroke=\"#333333\"/>\n";
                out << "<text x=\"" << (x0 + x1) / 2 - 8 << "\" y=\"" << (yt + yb) / 2 + 3
                    << "\">" << a.cusp.tet_of(id) << "." << a.cusp.ideal_vertex_of(id)
                    << "</text>\n";
            }
            out << "</g>\n";
        }
        out << "</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace veering
