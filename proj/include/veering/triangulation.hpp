#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "veering/errors.hpp"
#include "veering/perm4.hpp"

namespace veering {

// Labeling conventions used throughout.
//
// A tetrahedron has vertices 0..3 and faces 0..3, face f being the triangle
// opposite vertex f. Opposite-edge pairs index the three angle slots:
//   pair 0 = {01, 23},  pair 1 = {02, 13},  pair 2 = {03, 12},
// so slot (t, p) means "the dihedral angle on either edge of pair p of
// tetrahedron t".
//
// Every tetrahedron carries the reference orientation in which even vertex
// labelings are positive. A gluing is a bijection of vertex labels that is
// odd, i.e. orientation-reversing on the shared face; a triangulation all of
// whose gluings are odd is oriented.
//
// Rotating around a directed edge (a,b): let (c,d) order the complementary
// vertices so that (a,b,c,d) is an even arrangement of (0,1,2,3). The
// positive walk exits through face c and, after the gluing, continues with
// the image directed edge. Positive rotation around (a,b) appears
// counterclockwise when viewed from the head b, which is how vertex links in
// the boundary inherit their counterclockwise order (the link at the b-end of
// an edge is read off the positive walk around (a,b)).

/// Edge {a,b} of a tetrahedron, as an index 0..5.
inline int edge_index(int a, int b) {
    if (a > b) std::swap(a, b);
    static constexpr int table[4][4] = {
        {-1, 0, 1, 2},
        {0, -1, 3, 4},
        {1, 3, -1, 5},
        {2, 4, 5, -1},
    };
    return table[a][b];
}

/// Opposite-edge pair of edge {a,b}: 0 for {01,23}, 1 for {02,13}, 2 for {03,12}.
inline int pair_of_edge(int a, int b) {
    if (a > b) std::swap(a, b);
    return a == 0 ? b - 1 : 5 - a - b;
}

/// The two edges of pair p: {0, p+1} and its complement.
inline std::pair<std::array<int, 2>, std::array<int, 2>> edges_of_pair(int p) {
    std::array<int, 2> e0{0, p + 1};
    std::array<int, 2> e1{};
    int k = 0;
    for (int v = 0; v < 4; ++v)
        if (v != 0 && v != p + 1) e1[static_cast<std::size_t>(k++)] = v;
    return {e0, e1};
}

/// For edge {a,b} of pair p at vertex a, the other endpoint b; used as
/// "the pair-p partner of vertex a".
inline int pair_partner(int vertex, int p) {
    for (int w = 0; w < 4; ++w)
        if (w != vertex && pair_of_edge(vertex, w) == p) return w;
    check_internal(false, "pair_partner: no partner found");
    return -1;
}

struct FaceGluing {
    int tet = -1;
    Perm4 perm;  // perm[f] is the face of `tet` glued to face f
};

/// Ideal triangulation of an oriented 3-manifold with torus cusps:
/// n tetrahedra, all 4n faces glued in pairs.
struct Triangulation {
    std::string name;
    int n = 0;
    // glue[t][f] describes the gluing of face f of tetrahedron t.
    std::vector<std::array<FaceGluing, 4>> glue;
};

/// Structural validation: involutive odd gluings, no face glued to itself.
/// Diagnostics name the offending tetrahedron and face.
inline void validate(const Triangulation& tri) {
    require(tri.n >= 1, "empty", "triangulation has no tetrahedra");
    require(static_cast<int>(tri.glue.size()) == tri.n, "schema", "gluing table size mismatch");
    for (int t = 0; t < tri.n; ++t) {
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = tri.glue[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)];
            require(g.tet >= 0 && g.tet < tri.n, "schema",
                    "tet " + std::to_string(t) + " face " + std::to_string(f) +
                        ": target tetrahedron " + std::to_string(g.tet) + " out of range");
            int f2 = g.perm[f];
            require(!(g.tet == t && f2 == f), "self-glued-face",
                    "tet " + std::to_string(t) + " face " + std::to_string(f) + " is glued to itself");
            const FaceGluing& back = tri.glue[static_cast<std::size_t>(g.tet)][static_cast<std::size_t>(f2)];
            require(back.tet == t && back.perm == g.perm.inverse(), "non-involutive",
                    "gluing of tet " + std::to_string(t) + " face " + std::to_string(f) +
                        " is not matched by the inverse gluing at tet " + std::to_string(g.tet) +
                        " face " + std::to_string(f2));
            require(g.perm.is_odd(), "non-orientable",
                    "gluing of tet " + std::to_string(t) + " face " + std::to_string(f) +
                        " has even permutation " + g.perm.str() +
                        "; the triangulation is not oriented");
        }
    }
}

/// One dihedral wedge around an edge, with the edge directed (a,b).
struct EdgeIncidence {
    int tet;
    int a, b;
};

/// An interior edge of the manifold. `around` lists the wedges in positive
/// rotation order for the direction of the first incidence; the two ends are
/// the head/tail vertex classes of the boundary complex.
struct EdgeClass {
    int id = -1;
    std::vector<EdgeIncidence> around;
    int degree() const { return static_cast<int>(around.size()); }
};

/// Positive-rotation step around the directed edge (a,b) of tet t.
inline EdgeIncidence edge_walk_step(const Triangulation& tri, const EdgeIncidence& cur) {
    int c = -1, d = -1;
    for (int v = 0; v < 4; ++v)
        if (v != cur.a && v != cur.b) (c < 0 ? c : d) = v;
    if (!arrangement_even(cur.a, cur.b, c, d)) std::swap(c, d);
    const FaceGluing& g = tri.glue[static_cast<std::size_t>(cur.tet)][static_cast<std::size_t>(c)];
    return EdgeIncidence{g.tet, g.perm[cur.a], g.perm[cur.b]};
}

/// Full positive orbit of a directed edge. The orbit never contains the
/// reversed direction on an oriented triangulation; checked anyway.
inline std::vector<EdgeIncidence> edge_walk(const Triangulation& tri, EdgeIncidence start) {
    std::vector<EdgeIncidence> orbit;
    EdgeIncidence cur = start;
    do {
        orbit.push_back(cur);
        check_internal(orbit.size() <= static_cast<std::size_t>(6 * tri.n) + 1,
                       "edge walk failed to close");
        cur = edge_walk_step(tri, cur);
        check_internal(!(cur.tet == start.tet && cur.a == start.b && cur.b == start.a),
                       "edge walk returned with reversed direction (edge link not orientable)");
    } while (!(cur.tet == start.tet && cur.a == start.a && cur.b == start.b));
    return orbit;
}

struct EdgeTable {
    std::vector<EdgeClass> classes;
    // class_of[6*t + edge_index(a,b)]
    std::vector<int> class_of;

    int at(int tet, int a, int b) const {
        return class_of[static_cast<std::size_t>(6 * tet + edge_index(a, b))];
    }
    int max_degree() const {
        int m = 0;
        for (const EdgeClass& e : classes) m = std::max(m, e.degree());
        return m;
    }
};

/// Partition of the 6n edge incidences into edge classes, each with its
/// cyclic rotation order. Total degree is 6n.
inline EdgeTable edge_classes(const Triangulation& tri) {
    EdgeTable table;
    table.class_of.assign(static_cast<std::size_t>(6 * tri.n), -1);
    for (int t = 0; t < tri.n; ++t) {
        for (int e = 0; e < 6; ++e) {
            if (table.class_of[static_cast<std::size_t>(6 * t + e)] >= 0) continue;
            static constexpr int ends[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
            EdgeClass ec;
            ec.id = static_cast<int>(table.classes.size());
            ec.around = edge_walk(tri, EdgeIncidence{t, ends[e][0], ends[e][1]});
            for (const EdgeIncidence& inc : ec.around) {
                int idx = 6 * inc.tet + edge_index(inc.a, inc.b);
                check_internal(table.class_of[static_cast<std::size_t>(idx)] == -1,
                               "edge orbit revisited an incidence");
                table.class_of[static_cast<std::size_t>(idx)] = ec.id;
            }
            table.classes.push_back(std::move(ec));
        }
    }
    int total = 0;
    for (const EdgeClass& e : table.classes) total += e.degree();
    check_internal(total == 6 * tri.n, "edge class degrees do not sum to 6n");
    return table;
}

/// Combinatorial isomorphism test (as labeled gluing complexes, up to
/// relabeling of tetrahedra and vertices). Seeds tet 0 of `a` onto every
/// (tet, permutation) of `b` and propagates across gluings.
inline bool isomorphic(const Triangulation& a, const Triangulation& b) {
    if (a.n != b.n) return false;
    std::vector<std::array<int, 4>> perms;
    {
        std::array<int, 4> v{0, 1, 2, 3};
        do perms.push_back(v);
        while (std::next_permutation(v.begin(), v.end()));
    }
    for (int t0 = 0; t0 < b.n; ++t0) {
        for (const std::array<int, 4>& seed : perms) {
            std::vector<int> tet_map(static_cast<std::size_t>(a.n), -1);
            std::vector<Perm4> vert_map(static_cast<std::size_t>(a.n));
            std::vector<int> stack;
            tet_map[0] = t0;
            vert_map[0] = Perm4(seed);
            stack.push_back(0);
            bool ok = true;
            while (ok && !stack.empty()) {
                int t = stack.back();
                stack.pop_back();
                for (int f = 0; f < 4 && ok; ++f) {
                    const FaceGluing& ga = a.glue[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)];
                    const FaceGluing& gb =
                        b.glue[static_cast<std::size_t>(tet_map[static_cast<std::size_t>(t)])]
                              [static_cast<std::size_t>(vert_map[static_cast<std::size_t>(t)][f])];
                    // Required image of tet ga.tet: gb.perm ∘ vert_map[t] ∘ ga.perm⁻¹.
                    Perm4 want = gb.perm.of(vert_map[static_cast<std::size_t>(t)].of(ga.perm.inverse()));
                    int ta = ga.tet;
                    if (tet_map[static_cast<std::size_t>(ta)] == -1) {
                        tet_map[static_cast<std::size_t>(ta)] = gb.tet;
                        vert_map[static_cast<std::size_t>(ta)] = want;
                        stack.push_back(ta);
                    } else if (tet_map[static_cast<std::size_t>(ta)] != gb.tet ||
                               !(vert_map[static_cast<std::size_t>(ta)] == want)) {
                        ok = false;
                    }
                }
            }
            if (ok) {
                bool total = true;
                for (int v : tet_map) total = total && v >= 0;
                if (total) return true;
            }
        }
    }
    return false;
}

}  // namespace veering
