#pragma once

#include <cstdint>
#include <vector>

#include "veering/angles.hpp"
#include "veering/coloring.hpp"
#include "veering/curves.hpp"
#include "veering/cusp.hpp"

namespace veering {

// Tangent vectors to the space of generalized angle structures. A normal
// curve deforms angles by +1 on the slot opposite each entered side and -1 on
// the slot opposite each left side; such vectors preserve both the
// tetrahedron and the edge equations, which is asserted at construction, not
// assumed.

struct DeformationVector {
    std::vector<std::int64_t> d;  // per angle slot

    int n() const { return static_cast<int>(d.size()) / 3; }
    std::int64_t at(int tet, int p) const { return d[static_cast<std::size_t>(3 * tet + p)]; }

    DeformationVector& operator+=(const DeformationVector& o) {
        check_internal(d.size() == o.d.size(), "deformation size mismatch");
        for (std::size_t i = 0; i < d.size(); ++i) d[i] += o.d[i];
        return *this;
    }
    friend DeformationVector operator-(const DeformationVector& a, const DeformationVector& b) {
        check_internal(a.d.size() == b.d.size(), "deformation size mismatch");
        DeformationVector out = a;
        for (std::size_t i = 0; i < out.d.size(); ++i) out.d[i] -= b.d[i];
        return out;
    }
    friend bool operator==(const DeformationVector& a, const DeformationVector& b) { return a.d == b.d; }
};

namespace detail {

inline void assert_tangent(const Triangulation& tri, const EdgeTable& edges,
                           const DeformationVector& v) {
    for (int t = 0; t < tri.n; ++t)
        check_internal(v.at(t, 0) + v.at(t, 1) + v.at(t, 2) == 0,
                       "deformation breaks the tetrahedron equation at tet " + std::to_string(t));
    for (const EdgeClass& e : edges.classes) {
        std::int64_t s = 0;
        for (const EdgeIncidence& inc : e.around) s += v.at(inc.tet, pair_of_edge(inc.a, inc.b));
        check_internal(s == 0, "deformation breaks the edge equation at edge " + std::to_string(e.id));
    }
}

}  // namespace detail

/// Leading-trailing deformation of a normal curve: entering a triangle abc
/// through ab and leaving through bc raises the angle at c and lowers the one
/// at a, with multiplicity along the curve.
inline DeformationVector leading_trailing(const Triangulation& tri, const EdgeTable& edges,
                                          const CuspComplex& cusp, const NormalCurve& curve) {
    DeformationVector v;
    v.d.assign(static_cast<std::size_t>(3 * cusp.n), 0);
    for (const CurveSegment& s : curve.segs) {
        v.d[static_cast<std::size_t>(cusp.slot_of(s.tri, s.entry))] += 1;
        v.d[static_cast<std::size_t>(cusp.slot_of(s.tri, s.exit))] -= 1;
    }
    detail::assert_tangent(tri, edges, v);
    return v;
}

/// Deformation of the clockwise loop around either end of an edge; the two
/// ends induce the same vector, which is asserted.
inline DeformationVector edge_loop_deformation(const Triangulation& tri, const EdgeTable& edges,
                                               const CuspComplex& cusp, int edge_class) {
    int v0 = cusp.class_ends[static_cast<std::size_t>(edge_class)][0];
    int v1 = cusp.class_ends[static_cast<std::size_t>(edge_class)][1];
    DeformationVector a = leading_trailing(tri, edges, cusp, vertex_loop(cusp, v0, true));
    DeformationVector b = leading_trailing(tri, edges, cusp, vertex_loop(cusp, v1, true));
    check_internal(a == b, "the two ends of edge " + std::to_string(edge_class) +
                               " induce different loop deformations");
    return a;
}

/// theta + sum of coeff * D, exact; the result must still satisfy the angle
/// equations.
inline AngleVector apply(const Triangulation& tri, const EdgeTable& edges, const AngleVector& theta,
                         const std::vector<std::pair<Rational, const DeformationVector*>>& terms) {
    require(static_cast<int>(theta.a.size()) == 3 * tri.n, "dimension", "angle vector size mismatch");
    AngleVector out = theta;
    for (const auto& [coeff, dv] : terms) {
        check_internal(dv->d.size() == theta.a.size(), "deformation size mismatch");
        for (std::size_t i = 0; i < out.a.size(); ++i)
            out.a[i] += coeff * Rational(dv->d[i]);
    }
    AngleCheck chk = check_angle_vector(tri, edges, out);
    check_internal(chk.cls != AngleClass::invalid, "deformation left the space of angle structures");
    return out;
}

inline AngleVector apply(const Triangulation& tri, const EdgeTable& edges, const AngleVector& theta,
                         const Rational& coeff, const DeformationVector& dv) {
    return apply(tri, edges, theta, {{coeff, &dv}});
}

/// The hinge-rescue direction: clockwise loops around blue edges minus
/// clockwise loops around red ones.
inline DeformationVector color_signed_edge_deformation(const Triangulation& tri,
                                                       const EdgeTable& edges,
                                                       const CuspComplex& cusp,
                                                       const Coloring& coloring) {
    DeformationVector total;
    total.d.assign(static_cast<std::size_t>(3 * tri.n), 0);
    for (const EdgeClass& e : edges.classes) {
        DeformationVector de = edge_loop_deformation(tri, edges, cusp, e.id);
        if (coloring.edge[static_cast<std::size_t>(e.id)] == Color::blue)
            total += de;
        else
            total = total - de;
    }
    detail::assert_tangent(tri, edges, total);
    return total;
}

}  // namespace veering
