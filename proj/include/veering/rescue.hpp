#pragma once

#include <map>
#include <optional>
#include <vector>

#include "veering/deform.hpp"
#include "veering/pipeline.hpp"

namespace veering {

// Unflattening a veering taut structure into a positive angle structure.
//
// Stage one adds t times the blue-minus-red edge loop deformation: hinge
// tetrahedra become (pi-4t, 2t, 2t), non-hinge ones (pi-4t, 4t, 0) with the
// zero opposite a ladderpole segment. Stage two rescues the remaining zeros
// one at a time along closed null-homotopic curves that descend a ladder to a
// hinge and return through the neighboring one; with weights proportional to
// ladder heights this yields the certified lower bound pi / (12 d_max^2).

namespace detail {

/// Asserts the stage-one shape of theta slot by slot.
inline void assert_rescued_shape(const Analysis& a, const AngleVector& theta, const Rational& t) {
    Rational pi(1), four_t = Rational(4) * t, two_t = Rational(2) * t;
    for (int tet = 0; tet < a.tri.n; ++tet) {
        int p = a.veering.taut.pi_pair[static_cast<std::size_t>(tet)];
        check_internal(theta.at(tet, p) == pi - four_t, "wide pair has unexpected angle");
        if (a.veering.hinge[static_cast<std::size_t>(tet)]) {
            check_internal(theta.at(tet, (p + 1) % 3) == two_t && theta.at(tet, (p + 2) % 3) == two_t,
                           "hinge thin pairs not equalized");
        } else {
            auto [e0, e1] = edges_of_pair(p);
            Color diag = a.veering.coloring.edge[static_cast<std::size_t>(a.edges.at(tet, e0[0], e0[1]))];
            check_internal(
                a.veering.coloring.edge[static_cast<std::size_t>(a.edges.at(tet, e1[0], e1[1]))] == diag,
                "non-hinge with mixed diagonal colors");
            int zero_pair = -1;
            for (int d = 1; d <= 2; ++d) {
                int q = (p + d) % 3;
                if (theta.at(tet, q) == Rational(0)) {
                    check_internal(zero_pair == -1, "two flat pairs on a non-hinge");
                    zero_pair = q;
                } else {
                    check_internal(theta.at(tet, q) == four_t, "non-hinge thin pair not 4t");
                }
            }
            check_internal(zero_pair >= 0, "non-hinge without flat pair");
            // The zero sits on the thin pair of the opposite color.
            auto [z0, z1] = edges_of_pair(zero_pair);
            check_internal(
                a.veering.coloring.edge[static_cast<std::size_t>(a.edges.at(tet, z0[0], z0[1]))] ==
                    opposite(diag),
                "flat pair does not have the color opposite the diagonals");
            // The zero corners are opposite ladderpole segments.
            for (int v = 0; v < 4; ++v) {
                int tri_id = a.cusp.tri_id(tet, v);
                for (int k = 0; k < 3; ++k)
                    if (a.cusp.slot_of(tri_id, k) == 3 * tet + zero_pair)
                        check_internal(a.ladders.pole_pos[static_cast<std::size_t>(tri_id)] == k,
                                       "flat angle not opposite a ladderpole segment");
            }
        }
    }
}

}  // namespace detail

/// Stage one: taut + t * (blue - red) edge loops, for t in (0, pi/4]. Strictly
/// interior t keeps hinges positive; the boundary value pi/4 is used by the
/// ladderpole holonomy construction.
inline AngleVector hinge_rescue(const Analysis& a, const Rational& t) {
    require(Rational(0) < t && t <= Rational(1, 4), "range",
            "hinge rescue needs t in (0, 1/4] of pi, got " + t.str());
    DeformationVector d = color_signed_edge_deformation(a.tri, a.edges, a.cusp, a.veering.coloring);
    AngleVector theta = apply(a.tri, a.edges, a.veering.taut.angles(), t, d);
    detail::assert_rescued_shape(a, theta, t);
    return theta;
}

/// The rescue curve through cusp triangle `tri_id`, entered across its pole
/// side: descend the ladder to the first hinge, cross back, and climb the
/// neighboring ladder to close up. The height of the starting triangle equals
/// the number of rungs descended.
inline NormalCurve build_rescue_curve(const Analysis& a, int tri_id) {
    const LadderDecomposition& L = a.ladders;
    std::vector<CurveSegment> segs;
    // Down the ladder of tri_id.
    int cur = tri_id;
    int entry = L.pole_pos[static_cast<std::size_t>(tri_id)];
    int steps = 0;
    while (!a.veering.hinge[static_cast<std::size_t>(a.cusp.tet_of(cur))]) {
        segs.push_back(CurveSegment{cur, entry, L.base_pos(cur)});
        std::pair<int, int> nxt = L.down_step(a.cusp, cur);
        check_internal(nxt.second == L.rung_pos[static_cast<std::size_t>(nxt.first)],
                       "descent entered a triangle off its wide rung");
        cur = nxt.first;
        entry = nxt.second;
        ++steps;
        check_internal(steps <= 4 * a.cusp.n, "rescue descent failed to reach a hinge");
    }
    check_internal(steps == L.height[static_cast<std::size_t>(tri_id)],
                   "descent length differs from the stored height");
    // Cross back through the hinge's pole side, which lies on the same pole
    // curve as the side we entered through.
    int hinge_pole = L.pole_pos[static_cast<std::size_t>(cur)];
    auto pole_curve_of_side = [&](int tri, int k) {
        int cpos = CuspComplex::side_corner_pos(k)[0];
        // side_corner_pos is relative to the canonical instance; map through
        // the class to read an endpoint vertex.
        const CuspSide& s = a.cusp.sides[static_cast<std::size_t>(
            a.cusp.side_class_of[static_cast<std::size_t>(tri)][static_cast<std::size_t>(k)])];
        (void)cpos;
        return L.pole_of_vertex[static_cast<std::size_t>(
            a.cusp.vertex_at(s.tri0, CuspComplex::side_corner_pos(s.k0)[0]))];
    };
    check_internal(pole_curve_of_side(cur, hinge_pole) ==
                       pole_curve_of_side(tri_id, L.pole_pos[static_cast<std::size_t>(tri_id)]),
                   "descent reached a hinge on the wrong pole");
    segs.push_back(CurveSegment{cur, entry, hinge_pole});
    std::pair<int, int> over = a.cusp.side_mate[static_cast<std::size_t>(cur)][static_cast<std::size_t>(hinge_pole)];
    // Climb the neighboring ladder back to the triangle across the starting
    // pole side.
    std::pair<int, int> target = a.cusp.side_mate[static_cast<std::size_t>(tri_id)]
                                                 [static_cast<std::size_t>(L.pole_pos[static_cast<std::size_t>(tri_id)])];
    cur = over.first;
    entry = over.second;
    check_internal(entry == L.pole_pos[static_cast<std::size_t>(cur)], "hinge crossing missed the pole");
    int guard = 0;
    while (cur != target.first) {
        segs.push_back(CurveSegment{cur, entry, L.base_pos(cur)});
        std::pair<int, int> nxt = L.down_step(a.cusp, cur);
        cur = nxt.first;
        entry = nxt.second;
        check_internal(++guard <= 4 * a.cusp.n, "rescue return failed to reach the start");
    }
    check_internal(entry != target.second, "rescue curve closes through its own entry side");
    segs.push_back(CurveSegment{cur, entry, target.second});
    return make_normal_curve(a.cusp, std::move(segs));
}

struct RescueStep {
    int slot;  // the flat slot being rescued
    Rational coeff;
    NormalCurve curve;
};

struct RescueResult {
    AngleVector theta;
    std::vector<RescueStep> log;
};

/// Full rescue pipeline: stage one at t = pi/6, then rescue flat slots one
/// at a time, each step using half the largest coefficient that keeps every
/// decreased slot positive. Terminates in at most one step per initial flat
/// slot and returns a strictly positive structure.
inline RescueResult rescue_all(const Analysis& a) {
    RescueResult out;
    out.theta = hinge_rescue(a, Rational(1, 6));
    auto flat_slots = [&]() {
        std::vector<int> flats;
        for (int s = 0; s < 3 * a.tri.n; ++s)
            if (out.theta.a[static_cast<std::size_t>(s)] == Rational(0)) flats.push_back(s);
        return flats;
    };
    std::vector<int> flats = flat_slots();
    std::size_t budget = flats.size();
    while (!flats.empty()) {
        check_internal(out.log.size() < budget, "rescue exceeded its step budget");
        // Lexicographically least flat slot adjacent to a non-degenerate
        // tetrahedron.
        int chosen_slot = -1, chosen_face = -1;
        auto degenerate = [&](int tet) {
            for (int p = 0; p < 3; ++p)
                if (out.theta.at(tet, p) == Rational(0)) return true;
            return false;
        };
        for (int s : flats) {
            int tet = s / 3;
            for (int f = 0; f < 4 && chosen_slot == -1; ++f)
                if (!degenerate(a.tri.glue[static_cast<std::size_t>(tet)][static_cast<std::size_t>(f)].tet)) {
                    chosen_slot = s;
                    chosen_face = f;
                }
            if (chosen_slot != -1) break;
        }
        check_internal(chosen_slot >= 0, "no flat slot borders a non-degenerate tetrahedron");
        int tet = chosen_slot / 3, p = chosen_slot % 3;
        int v = pair_partner(chosen_face, p);
        int tri_id = a.cusp.tri_id(tet, v);
        // The flat corner of this cusp triangle is opposite its pole side,
        // which leads into the non-degenerate neighbor.
        check_internal(a.cusp.slot_of(tri_id, a.ladders.pole_pos[static_cast<std::size_t>(tri_id)]) ==
                           chosen_slot,
                       "flat corner is not opposite the pole side");
        NormalCurve curve = build_rescue_curve(a, tri_id);
        DeformationVector d = leading_trailing(a.tri, a.edges, a.cusp, curve);
        check_internal(d.d[static_cast<std::size_t>(chosen_slot)] > 0,
                       "rescue curve does not raise its flat slot");
        std::optional<Rational> max_step;
        for (int s = 0; s < 3 * a.tri.n; ++s) {
            if (d.d[static_cast<std::size_t>(s)] >= 0) continue;
            const Rational& val = out.theta.a[static_cast<std::size_t>(s)];
            check_internal(val > Rational(0), "rescue curve decreases a flat slot");
            Rational cap = val / Rational(-d.d[static_cast<std::size_t>(s)]);
            max_step = max_step ? veering::min(*max_step, cap) : cap;
        }
        check_internal(max_step.has_value(), "rescue curve decreases nothing");
        Rational coeff = *max_step / Rational(2);
        out.theta = apply(a.tri, a.edges, out.theta, coeff, d);
        std::vector<int> next_flats = flat_slots();
        check_internal(next_flats.size() < flats.size(), "rescue step did not reduce the flat count");
        flats = std::move(next_flats);
        out.log.push_back(RescueStep{chosen_slot, coeff, std::move(curve)});
    }
    check_internal(check_angle_vector(a.tri, a.edges, out.theta).cls == AngleClass::positive,
                   "rescue_all failed to reach a positive structure");
    return out;
}

struct BoundReport {
    int d = 0;
    int d_max = 0;
    int e_max = 0;
    Rational kappa = Rational(1, 24);
    Rational min_angle;
    Rational certified_bound;  // 2*kappa / d_max^2 = 1/(12 d_max^2)
};

struct BoundedRescueResult {
    AngleVector theta;
    BoundReport report;
};

/// Verifies the height bookkeeping around every non-hinge tetrahedron: the
/// across-pole neighbors of its two descending tips are ascending, and their
/// partners are exactly the next triangles down from its two ascending tips.
inline void check_height_relation(const Analysis& a) {
    require(a.veering.transverse.has_value(), "not-transverse-taut",
            "height relation needs a transverse orientation");
    auto ascending = [&](int tri_id) {
        return a.ladders.ladders[static_cast<std::size_t>(
                                     a.ladders.ladder_of_tri[static_cast<std::size_t>(tri_id)])]
            .ascending;
    };
    for (int tet = 0; tet < a.tri.n; ++tet) {
        if (a.veering.hinge[static_cast<std::size_t>(tet)]) continue;
        std::vector<int> asc, desc;
        for (int v = 0; v < 4; ++v)
            (ascending(a.cusp.tri_id(tet, v)) ? asc : desc).push_back(a.cusp.tri_id(tet, v));
        check_internal(asc.size() == 2 && desc.size() == 2, "tips not split two and two");
        auto partner = [&](int tri_id) {
            int other_tet = a.cusp.tet_of(tri_id);
            for (int v = 0; v < 4; ++v) {
                int cand = a.cusp.tri_id(other_tet, v);
                if (cand != tri_id && ascending(cand)) return cand;
            }
            check_internal(false, "ascending tip without partner");
            return -1;
        };
        std::vector<int> from_desc, from_asc;
        for (int t3 : desc) {
            std::pair<int, int> over = a.cusp.side_mate[static_cast<std::size_t>(t3)][static_cast<std::size_t>(
                a.ladders.pole_pos[static_cast<std::size_t>(t3)])];
            check_internal(ascending(over.first), "across-pole neighbor of a descending tip not ascending");
            from_desc.push_back(partner(over.first));
        }
        for (int t1 : asc) from_asc.push_back(a.ladders.down_step(a.cusp, t1).first);
        std::sort(from_desc.begin(), from_desc.end());
        std::sort(from_asc.begin(), from_asc.end());
        check_internal(from_desc == from_asc, "height relation violated at tet " + std::to_string(tet));
        for (int t1 : asc)
            check_internal(a.ladders.height[static_cast<std::size_t>(
                               a.ladders.down_step(a.cusp, t1).first)] ==
                               a.ladders.height[static_cast<std::size_t>(t1)] - 1,
                           "height does not drop by one below an ascending tip");
    }
}

/// Certified bound: on a transverse-taut veering structure, stage one
/// plus height-weighted rescue curves yields angles >= pi / (12 d_max^2),
/// certified exactly.
inline BoundedRescueResult bounded_rescue(const Analysis& a) {
    require(a.veering.transverse.has_value(), "not-transverse-taut",
            "bounded rescue needs a transverse-taut structure; use the double cover instead");
    BoundedRescueResult out;
    out.theta = hinge_rescue(a, Rational(1, 6));
    out.report.d = max_ascending_height(a.ladders);
    out.report.d_max = max_fan_length(a.cusp, a.veering.taut);
    out.report.e_max = a.edges.max_degree();
    check_internal(out.report.d + 2 == out.report.d_max, "d + 2 != d_max");
    check_internal(out.report.e_max >= out.report.d_max + 3, "e_max < d_max + 3");
    out.report.certified_bound =
        Rational(1, 12) / Rational(static_cast<std::int64_t>(out.report.d_max) * out.report.d_max);
    check_height_relation(a);

    if (out.report.d > 0) {
        // sigma pairs the two ascending tips of each tetrahedron.
        std::vector<int> sigma(static_cast<std::size_t>(4 * a.tri.n), -1);
        for (int tet = 0; tet < a.tri.n; ++tet) {
            std::vector<int> asc;
            for (int v = 0; v < 4; ++v) {
                int tri_id = a.cusp.tri_id(tet, v);
                if (a.ladders.ladders[static_cast<std::size_t>(
                                          a.ladders.ladder_of_tri[static_cast<std::size_t>(tri_id)])]
                        .ascending)
                    asc.push_back(tri_id);
            }
            check_internal(asc.size() == 2, "tetrahedron without two ascending tips");
            sigma[static_cast<std::size_t>(asc[0])] = asc[1];
            sigma[static_cast<std::size_t>(asc[1])] = asc[0];
        }
        Rational unit = out.report.kappa /
                        Rational(static_cast<std::int64_t>(out.report.d_max) * out.report.d_max);
        std::vector<DeformationVector> dvs;
        std::vector<std::pair<Rational, const DeformationVector*>> terms;
        std::map<int, int> crossings_per_triangle;
        std::vector<std::pair<Rational, NormalCurve>> curves;
        for (int tri_id = 0; tri_id < 4 * a.tri.n; ++tri_id) {
            if (sigma[static_cast<std::size_t>(tri_id)] < 0) continue;  // descending tip
            if (a.veering.hinge[static_cast<std::size_t>(a.cusp.tet_of(tri_id))]) continue;  // empty curve
            int weight = a.ladders.height[static_cast<std::size_t>(sigma[static_cast<std::size_t>(tri_id)])];
            check_internal(weight >= 1, "non-hinge ascending tip with flat partner height");
            NormalCurve curve = build_rescue_curve(a, tri_id);
            for (const CurveSegment& s : curve.segs) ++crossings_per_triangle[s.tri];
            dvs.push_back(leading_trailing(a.tri, a.edges, a.cusp, curve));
            curves.emplace_back(Rational(weight) * unit, std::move(curve));
        }
        for (std::size_t i = 0; i < dvs.size(); ++i) terms.emplace_back(curves[i].first, &dvs[i]);
        out.theta = apply(a.tri, a.edges, out.theta, terms);
        for (const auto& [tri_id, count] : crossings_per_triangle)
            check_internal(count <= 2 * out.report.d,
                           "triangle crossed more than 2d times by the rescue curves");
    }
    out.report.min_angle = out.theta.min_entry();
    check_internal(out.report.min_angle >= out.report.certified_bound,
                   "bounded rescue missed its certified bound");
    check_internal(check_angle_vector(a.tri, a.edges, out.theta).cls == AngleClass::positive,
                   "bounded rescue did not produce a positive structure");
    return out;
}

/// The general case: build the transverse-taut double cover, run the bounded
/// rescue upstairs, average with the deck translate and project. The result
/// satisfies the same bound on the base.
inline BoundedRescueResult cover_and_average(const Triangulation& tri, const TautStructure& taut) {
    DoubleCover cover = transverse_double_cover(tri, taut);
    Analysis up = analyze(cover.tri, cover.taut);
    BoundedRescueResult upstairs = bounded_rescue(up);
    AngleVector down = average_and_project(cover, upstairs.theta);

    Analysis base = analyze(tri, taut);
    check_internal(max_fan_length(base.cusp, base.veering.taut) == upstairs.report.d_max,
                   "d_max changed under the double cover");
    check_internal(base.edges.max_degree() == upstairs.report.e_max,
                   "e_max changed under the double cover");
    BoundedRescueResult out;
    out.theta = down;
    out.report = upstairs.report;
    out.report.min_angle = down.min_entry();
    check_internal(out.report.min_angle >= out.report.certified_bound,
                   "projected structure missed the certified bound");
    check_internal(check_angle_vector(base.tri, base.edges, down).cls == AngleClass::positive,
                   "projected structure is not positive");
    return out;
}

}  // namespace veering
