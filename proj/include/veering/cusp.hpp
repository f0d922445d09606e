#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "veering/angles.hpp"
#include "veering/triangulation.hpp"

namespace veering {

// The boundary complex. Truncating tetrahedron tips yields one cusp triangle
// per (tetrahedron, vertex); their sides are glued by the face gluings and the
// result is a disjoint union of tori tiling the boundary.
//
// Corner/side bookkeeping for triangle id = 4t+v:
//   ccw[id]      the three "toward" vertices in counterclockwise corner order,
//                as seen from outside the cusp; (v, ccw[0], ccw[1], ccw[2]) is
//                an odd arrangement of (0,1,2,3).
//   corner k     sits on the tetrahedron edge {v, ccw[id][k]} and carries the
//                angle slot (t, pair_of_edge(v, ccw[id][k])).
//   side k       is opposite corner k and lies on face ccw[id][k] of t.
//
// A cusp vertex is an end of an interior edge; its link is the cyclic corner
// sequence read off the positive rotation walk around the edge directed into
// that end, which makes the stored order counterclockwise.

struct CuspVertex {
    int id = -1;
    int edge_class = -1;
    int end = -1;  // 0 = tail end of the class's first stored incidence, 1 = head end
    int component = -1;
    std::vector<std::pair<int, int>> corners;    // (tri, k), ccw order
    std::vector<std::pair<int, int>> exit_inst;  // slot j: side instance crossed between corners j and j+1, in corners[j]'s triangle
    int degree() const { return static_cast<int>(corners.size()); }
};

struct CuspSide {
    int id = -1;
    int tri0 = -1, k0 = -1;  // lex-least instance; canonical direction runs corner (k0+1)%3 -> (k0+2)%3 here
    int tri1 = -1, k1 = -1;
    int component = -1;
};

struct CuspTorus {
    int id = -1;
    std::vector<int> triangles;
    std::vector<int> verts;
    std::vector<int> sides;
};

struct CuspComplex {
    int n = 0;  // tetrahedra
    std::vector<std::array<int, 3>> ccw;                              // per triangle
    std::vector<std::array<std::pair<int, int>, 3>> side_mate;        // glued instance
    std::vector<std::array<int, 3>> side_class_of;                    // 1-cell id
    // corner_image[tri][k][u]: where corner u of side (tri,k) lands in the
    // mate triangle (-1 at u == k).
    std::vector<std::array<std::array<int, 3>, 3>> corner_image;
    std::vector<CuspSide> sides;
    std::vector<CuspVertex> vertices;
    std::vector<int> vertex_of_corner;    // 3*tri + k
    std::vector<int> link_pos_of_corner;  // 3*tri + k
    std::vector<std::array<int, 2>> class_ends;  // per edge class: vertex ids of end 0 / end 1
    std::vector<CuspTorus> components;
    std::vector<int> component_of_tri;

    int tri_id(int t, int v) const { return 4 * t + v; }
    int tet_of(int tri) const { return tri / 4; }
    int ideal_vertex_of(int tri) const { return tri % 4; }

    int corner_pos(int tri, int toward) const {
        for (int k = 0; k < 3; ++k)
            if (ccw[static_cast<std::size_t>(tri)][static_cast<std::size_t>(k)] == toward) return k;
        check_internal(false, "corner_pos: vertex not a corner of this triangle");
        return -1;
    }
    int vertex_at(int tri, int k) const {
        return vertex_of_corner[static_cast<std::size_t>(3 * tri + k)];
    }
    /// Angle slot carried by corner (tri, k).
    int slot_of(int tri, int k) const {
        return 3 * tet_of(tri) +
               pair_of_edge(ideal_vertex_of(tri), ccw[static_cast<std::size_t>(tri)][static_cast<std::size_t>(k)]);
    }
    /// Endpoint corner positions of side (tri, k): {(k+1)%3, (k+2)%3}; the
    /// canonical direction of a 1-cell runs first -> second on its tri0 side.
    static std::array<int, 2> side_corner_pos(int k) { return {(k + 1) % 3, (k + 2) % 3}; }

    /// (vertex, slot index) of one end of a 1-cell. End 0 is the tail of the
    /// canonical direction, end 1 the head.
    std::pair<int, int> side_end_slot(int side, int end) const {
        const CuspSide& s = sides[static_cast<std::size_t>(side)];
        int cpos = side_corner_pos(s.k0)[static_cast<std::size_t>(end == 0 ? 0 : 1)];
        int v = vertex_at(s.tri0, cpos);
        int p = link_pos_of_corner[static_cast<std::size_t>(3 * s.tri0 + cpos)];
        const CuspVertex& vx = vertices[static_cast<std::size_t>(v)];
        int m = vx.degree();
        // The slot is adjacent to this corner: either slot p (exit side of
        // corner p) or slot p-1 (entry side).
        if (vx.exit_inst[static_cast<std::size_t>(p)] == std::make_pair(s.tri0, s.k0)) return {v, p};
        int q = (p + m - 1) % m;
        const std::pair<int, int>& prev_exit = vx.exit_inst[static_cast<std::size_t>(q)];
        check_internal(side_mate[static_cast<std::size_t>(prev_exit.first)][static_cast<std::size_t>(prev_exit.second)] ==
                           std::make_pair(s.tri0, s.k0),
                       "side_end_slot: side not adjacent to its endpoint corner");
        return {v, q};
    }
    int side_at_slot(int vertex, int slot) const {
        const std::pair<int, int>& inst = vertices[static_cast<std::size_t>(vertex)].exit_inst[static_cast<std::size_t>(slot)];
        return side_class_of[static_cast<std::size_t>(inst.first)][static_cast<std::size_t>(inst.second)];
    }
};

inline CuspComplex build_cusp_complex(const Triangulation& tri, const EdgeTable& edges) {
    CuspComplex c;
    c.n = tri.n;
    int ntri = 4 * tri.n;
    c.ccw.assign(static_cast<std::size_t>(ntri), {});
    for (int t = 0; t < tri.n; ++t) {
        for (int v = 0; v < 4; ++v) {
            std::array<int, 3> w{};
            int k = 0;
            for (int u = 0; u < 4; ++u)
                if (u != v) w[static_cast<std::size_t>(k++)] = u;
            if (arrangement_even(v, w[0], w[1], w[2])) std::swap(w[1], w[2]);
            c.ccw[static_cast<std::size_t>(c.tri_id(t, v))] = w;
        }
    }

    // Side instances and gluing. Side k of (t,v) lies on face f = ccw[..][k];
    // across the face gluing it lands in triangle (t2, perm(v)) on face perm(f).
    c.side_mate.assign(static_cast<std::size_t>(ntri), {});
    c.side_class_of.assign(static_cast<std::size_t>(ntri), {-1, -1, -1});
    c.corner_image.assign(static_cast<std::size_t>(ntri), {});
    for (int id = 0; id < ntri; ++id) {
        int t = id / 4, v = id % 4;
        for (int k = 0; k < 3; ++k) {
            int f = c.ccw[static_cast<std::size_t>(id)][static_cast<std::size_t>(k)];
            const FaceGluing& g = tri.glue[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)];
            int tri2 = c.tri_id(g.tet, g.perm[v]);
            int k2 = -1;
            for (int j = 0; j < 3; ++j)
                if (c.ccw[static_cast<std::size_t>(tri2)][static_cast<std::size_t>(j)] == g.perm[f]) k2 = j;
            check_internal(k2 >= 0, "cusp side gluing: mate position not found");
            c.side_mate[static_cast<std::size_t>(id)][static_cast<std::size_t>(k)] = {tri2, k2};
            for (int u = 0; u < 3; ++u)
                c.corner_image[static_cast<std::size_t>(id)][static_cast<std::size_t>(k)][static_cast<std::size_t>(u)] =
                    u == k ? -1
                           : c.corner_pos(tri2, g.perm[c.ccw[static_cast<std::size_t>(id)][static_cast<std::size_t>(u)]]);
        }
    }
    for (int id = 0; id < ntri; ++id)
        for (int k = 0; k < 3; ++k) {
            if (c.side_class_of[static_cast<std::size_t>(id)][static_cast<std::size_t>(k)] >= 0) continue;
            std::pair<int, int> mate = c.side_mate[static_cast<std::size_t>(id)][static_cast<std::size_t>(k)];
            check_internal(c.side_mate[static_cast<std::size_t>(mate.first)][static_cast<std::size_t>(mate.second)] ==
                               std::make_pair(id, k),
                           "cusp side gluing is not involutive");
            check_internal(!(mate.first == id && mate.second == k), "cusp side glued to itself");
            CuspSide s;
            s.id = static_cast<int>(c.sides.size());
            s.tri0 = id;
            s.k0 = k;
            s.tri1 = mate.first;
            s.k1 = mate.second;
            c.side_class_of[static_cast<std::size_t>(id)][static_cast<std::size_t>(k)] = s.id;
            c.side_class_of[static_cast<std::size_t>(mate.first)][static_cast<std::size_t>(mate.second)] = s.id;
            c.sides.push_back(s);
        }

    // Vertices: one per edge-class end. The link of the head end of a
    // directed edge is the positive walk around it; end 0 of a class uses the
    // reversed direction of its first stored incidence.
    c.vertex_of_corner.assign(static_cast<std::size_t>(3 * ntri), -1);
    c.link_pos_of_corner.assign(static_cast<std::size_t>(3 * ntri), -1);
    c.class_ends.assign(edges.classes.size(), {-1, -1});
    for (const EdgeClass& ec : edges.classes) {
        for (int end = 0; end < 2; ++end) {
            const EdgeIncidence& first = ec.around.front();
            EdgeIncidence start = end == 0 ? EdgeIncidence{first.tet, first.b, first.a} : first;
            std::vector<EdgeIncidence> orbit = end == 1 ? ec.around : edge_walk(tri, start);
            CuspVertex vx;
            vx.id = static_cast<int>(c.vertices.size());
            vx.edge_class = ec.id;
            vx.end = end;
            for (const EdgeIncidence& inc : orbit) {
                int id = c.tri_id(inc.tet, inc.b);
                int k = c.corner_pos(id, inc.a);
                vx.corners.emplace_back(id, k);
                // Exit face of the walk step: the c with (a,b,c,d) even.
                int e0 = -1, e1 = -1;
                for (int u = 0; u < 4; ++u)
                    if (u != inc.a && u != inc.b) (e0 < 0 ? e0 : e1) = u;
                int exit_face = arrangement_even(inc.a, inc.b, e0, e1) ? e0 : e1;
                vx.exit_inst.emplace_back(id, c.corner_pos(id, exit_face));
            }
            check_internal(static_cast<int>(vx.corners.size()) == ec.degree(),
                           "vertex link size differs from edge degree");
            for (int i = 0; i < vx.degree(); ++i) {
                const std::pair<int, int>& cr = vx.corners[static_cast<std::size_t>(i)];
                c.vertex_of_corner[static_cast<std::size_t>(3 * cr.first + cr.second)] = vx.id;
                c.link_pos_of_corner[static_cast<std::size_t>(3 * cr.first + cr.second)] = i;
                // The crossed side must glue into the next corner's triangle.
                const std::pair<int, int>& ex = vx.exit_inst[static_cast<std::size_t>(i)];
                const std::pair<int, int>& nx = vx.corners[static_cast<std::size_t>((i + 1) % vx.degree())];
                check_internal(c.side_mate[static_cast<std::size_t>(ex.first)][static_cast<std::size_t>(ex.second)].first ==
                                   nx.first,
                               "vertex link crossing does not reach the next corner");
            }
            c.class_ends[static_cast<std::size_t>(ec.id)][static_cast<std::size_t>(end)] = vx.id;
            c.vertices.push_back(std::move(vx));
        }
    }
    for (int i = 0; i < 3 * ntri; ++i)
        check_internal(c.vertex_of_corner[static_cast<std::size_t>(i)] >= 0, "corner not assigned to a vertex");

    // Components; each must be a torus. Orientability is inherited, so the
    // Euler characteristic test is decisive.
    c.component_of_tri.assign(static_cast<std::size_t>(ntri), -1);
    for (int id = 0; id < ntri; ++id) {
        if (c.component_of_tri[static_cast<std::size_t>(id)] >= 0) continue;
        CuspTorus torus;
        torus.id = static_cast<int>(c.components.size());
        std::vector<int> stack{id};
        c.component_of_tri[static_cast<std::size_t>(id)] = torus.id;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            torus.triangles.push_back(cur);
            for (int k = 0; k < 3; ++k) {
                int nb = c.side_mate[static_cast<std::size_t>(cur)][static_cast<std::size_t>(k)].first;
                if (c.component_of_tri[static_cast<std::size_t>(nb)] == -1) {
                    c.component_of_tri[static_cast<std::size_t>(nb)] = torus.id;
                    stack.push_back(nb);
                }
            }
        }
        std::sort(torus.triangles.begin(), torus.triangles.end());
        c.components.push_back(std::move(torus));
    }
    for (CuspVertex& vx : c.vertices) {
        vx.component = c.component_of_tri[static_cast<std::size_t>(vx.corners.front().first)];
        for (const std::pair<int, int>& cr : vx.corners)
            check_internal(c.component_of_tri[static_cast<std::size_t>(cr.first)] == vx.component,
                           "vertex link spans several components");
        c.components[static_cast<std::size_t>(vx.component)].verts.push_back(vx.id);
    }
    for (CuspSide& s : c.sides) {
        s.component = c.component_of_tri[static_cast<std::size_t>(s.tri0)];
        check_internal(c.component_of_tri[static_cast<std::size_t>(s.tri1)] == s.component,
                       "side instances in different components");
        c.components[static_cast<std::size_t>(s.component)].sides.push_back(s.id);
    }
    for (const CuspTorus& torus : c.components) {
        int chi = static_cast<int>(torus.verts.size()) - static_cast<int>(torus.sides.size()) +
                  static_cast<int>(torus.triangles.size());
        require(chi == 0, "not-a-torus",
                "boundary component " + std::to_string(torus.id) + " has Euler characteristic " +
                    std::to_string(chi) + ", so it is not a torus");
    }
    return c;
}

/// One fan at a cusp vertex: a maximal run of thin corners between the two
/// wide corners of a taut structure.
struct Fan {
    int vertex = -1;
    int side = -1;  // 0 or 1
    std::vector<std::pair<int, int>> corners;  // (tri, k), ccw order
    int length() const { return static_cast<int>(corners.size()); }
};

/// Splits a vertex link at its two pi-corners. Fans may be empty for a merely
/// taut structure; veering structures have both nonempty.
inline std::array<Fan, 2> fans_at(const CuspComplex& cusp, const TautStructure& taut, int vertex) {
    const CuspVertex& vx = cusp.vertices[static_cast<std::size_t>(vertex)];
    std::vector<int> wide;
    for (int i = 0; i < vx.degree(); ++i) {
        const std::pair<int, int>& cr = vx.corners[static_cast<std::size_t>(i)];
        int t = cusp.tet_of(cr.first);
        if (cusp.slot_of(cr.first, cr.second) == 3 * t + taut.pi_pair[static_cast<std::size_t>(t)])
            wide.push_back(i);
    }
    require(wide.size() == 2, "not-taut",
            "vertex " + std::to_string(vertex) + " link has " + std::to_string(wide.size()) +
                " pi-corners, expected exactly two");
    std::array<Fan, 2> fans;
    int m = vx.degree();
    for (int side = 0; side < 2; ++side) {
        Fan& fan = fans[static_cast<std::size_t>(side)];
        fan.vertex = vertex;
        fan.side = side;
        int from = wide[static_cast<std::size_t>(side)];
        int to = wide[static_cast<std::size_t>(1 - side)];
        for (int i = (from + 1) % m; i != to; i = (i + 1) % m)
            fan.corners.push_back(vx.corners[static_cast<std::size_t>(i)]);
    }
    return fans;
}

/// Max fan length over all cusp vertices.
inline int max_fan_length(const CuspComplex& cusp, const TautStructure& taut) {
    int d = 0;
    for (const CuspVertex& vx : cusp.vertices) {
        std::array<Fan, 2> fans = fans_at(cusp, taut, vx.id);
        d = std::max({d, fans[0].length(), fans[1].length()});
    }
    return d;
}

}  // namespace veering
