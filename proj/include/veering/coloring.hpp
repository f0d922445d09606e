#pragma once

#include <optional>
#include <string>
#include <vector>

#include "veering/angles.hpp"
#include "veering/cusp.hpp"
#include "veering/triangulation.hpp"

namespace veering {

// Red/blue structure of a veering taut structure.
//
// At a cusp vertex, every fan triangle has its wide corner immediately before
// or immediately after the vertex in the counterclockwise corner order of the
// triangle. If all fan triangles at the vertex (over both fans) agree, the
// vertex veers: wide-corner-before means left-veering, wide-corner-after
// right-veering. Left-veering edges are blue, right-veering red.
//
// The equivalent per-tetrahedron model: if pair p carries pi, the thin pair
// (p+1) mod 3 is red and (p+2) mod 3 is blue, with one fixed global chirality.
// (In the counterclockwise corner order of any cusp triangle the slot pairs
// always cycle p -> p+2 -> p+1, which is where the rule comes from.)

enum class Color { red, blue };

inline const char* to_string(Color c) { return c == Color::red ? "red" : "blue"; }
inline Color opposite(Color c) { return c == Color::red ? Color::blue : Color::red; }

struct Coloring {
    std::vector<Color> edge;  // per edge class
};

namespace detail {

/// Veering verdict of one vertex: red, blue, or failure. `mirrored` swaps the
/// before/after reading; only used to produce better diagnostics.
inline std::optional<Color> vertex_veer(const CuspComplex& cusp, const TautStructure& taut,
                                        int vertex, bool mirrored) {
    std::array<Fan, 2> fans = fans_at(cusp, taut, vertex);
    if (fans[0].length() == 0 || fans[1].length() == 0) return std::nullopt;
    bool any_before = false, any_after = false;
    for (const Fan& fan : fans) {
        for (const std::pair<int, int>& cr : fan.corners) {
            int tri = cr.first, k = cr.second;
            int t = cusp.tet_of(tri);
            int pi_slot = 3 * t + taut.pi_pair[static_cast<std::size_t>(t)];
            if (cusp.slot_of(tri, (k + 2) % 3) == pi_slot)
                any_before = true;  // wide corner is ccw-previous
            else if (cusp.slot_of(tri, (k + 1) % 3) == pi_slot)
                any_after = true;  // wide corner is ccw-next
            else
                check_internal(false, "fan triangle has no adjacent wide corner");
        }
    }
    if (any_before && any_after) return std::nullopt;
    if (mirrored) std::swap(any_before, any_after);
    return any_before ? Color::blue : Color::red;
}

}  // namespace detail

/// Edge coloring from the vertex-by-vertex veering condition. Fails with a
/// diagnostic naming the first bad vertex when the structure is not veering;
/// if the mirror chirality would have worked, the diagnostic says so.
inline Coloring color_edges(const Triangulation& tri, const EdgeTable& edges,
                            const CuspComplex& cusp, const TautStructure& taut) {
    (void)tri;
    Coloring coloring;
    coloring.edge.assign(edges.classes.size(), Color::red);
    std::vector<std::optional<Color>> verdict(cusp.vertices.size());
    for (const CuspVertex& vx : cusp.vertices) {
        verdict[static_cast<std::size_t>(vx.id)] = detail::vertex_veer(cusp, taut, vx.id, false);
        if (!verdict[static_cast<std::size_t>(vx.id)]) {
            bool mirror_ok = true;
            for (const CuspVertex& wx : cusp.vertices)
                mirror_ok = mirror_ok && detail::vertex_veer(cusp, taut, wx.id, true).has_value();
            fail("not-veering",
                 "taut structure is not veering at vertex " + std::to_string(vx.id) +
                     " (end " + std::to_string(vx.end) + " of edge " +
                     std::to_string(vx.edge_class) + ")" +
                     (mirror_ok ? "; the mirror chirality would accept it (mirror-veering)" : ""));
        }
    }
    for (const EdgeClass& ec : edges.classes) {
        std::optional<Color> c0 = verdict[static_cast<std::size_t>(cusp.class_ends[static_cast<std::size_t>(ec.id)][0])];
        std::optional<Color> c1 = verdict[static_cast<std::size_t>(cusp.class_ends[static_cast<std::size_t>(ec.id)][1])];
        check_internal(c0 == c1, "the two ends of edge " + std::to_string(ec.id) +
                                     " veer in different directions");
        coloring.edge[static_cast<std::size_t>(ec.id)] = *c0;
    }
    return coloring;
}

/// The forced coloring of the per-tetrahedron model: thin pair (p+1)%3 red,
/// (p+2)%3 blue. Empty when two tetrahedra force conflicting colors or some
/// edge class is nowhere thin.
inline std::optional<Coloring> square_model_coloring(const Triangulation& tri,
                                                     const EdgeTable& edges,
                                                     const TautStructure& taut) {
    std::vector<std::optional<Color>> forced(edges.classes.size());
    for (int t = 0; t < tri.n; ++t) {
        int p = taut.pi_pair[static_cast<std::size_t>(t)];
        for (int d = 1; d <= 2; ++d) {
            Color want = d == 1 ? Color::red : Color::blue;
            auto [e0, e1] = edges_of_pair((p + d) % 3);
            for (const std::array<int, 2>& e : {e0, e1}) {
                int cls = edges.at(t, e[0], e[1]);
                if (forced[static_cast<std::size_t>(cls)] && *forced[static_cast<std::size_t>(cls)] != want)
                    return std::nullopt;
                forced[static_cast<std::size_t>(cls)] = want;
            }
        }
    }
    Coloring out;
    out.edge.assign(edges.classes.size(), Color::red);
    for (std::size_t i = 0; i < forced.size(); ++i) {
        if (!forced[i]) return std::nullopt;  // an edge class that is nowhere thin
        out.edge[i] = *forced[i];
    }
    return out;
}

/// True exactly when the model's forced coloring exists and equals the given
/// one. Success here must coincide with color_edges succeeding and returning
/// the same coloring.
inline bool check_square_model(const Triangulation& tri, const EdgeTable& edges,
                               const TautStructure& taut, const Coloring& coloring) {
    std::optional<Coloring> forced = square_model_coloring(tri, edges, taut);
    return forced && forced->edge == coloring.edge;
}

/// hinge[t]: the two wide edges of t lie in edge classes of different colors.
inline std::vector<bool> classify_hinges(const Triangulation& tri, const EdgeTable& edges,
                                         const TautStructure& taut, const Coloring& coloring) {
    std::vector<bool> hinge(static_cast<std::size_t>(tri.n));
    for (int t = 0; t < tri.n; ++t) {
        auto [e0, e1] = edges_of_pair(taut.pi_pair[static_cast<std::size_t>(t)]);
        Color c0 = coloring.edge[static_cast<std::size_t>(edges.at(t, e0[0], e0[1]))];
        Color c1 = coloring.edge[static_cast<std::size_t>(edges.at(t, e1[0], e1[1]))];
        hinge[static_cast<std::size_t>(t)] = c0 != c1;
    }
    return hinge;
}

/// Coherent transverse orientation of the 2-skeleton: per face, whether it
/// points out of the tetrahedron. In every tetrahedron the two faces through
/// one wide edge point in, the two through the other point out.
struct FaceOrientation {
    std::vector<std::array<bool, 4>> out_of;
    bool outward(int t, int f) const { return out_of[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)]; }
};

namespace detail {

/// u(t,f) = 0 when face f contains the low wide edge {0, p+1} of tetrahedron
/// t. Faces with equal u point the same way; x_t chooses which way.
inline int transverse_u(const TautStructure& taut, int t, int f) {
    int p = taut.pi_pair[static_cast<std::size_t>(t)];
    return (f == 0 || f == p + 1) ? 1 : 0;
}

/// Parity forced between x_t and x_t' across a gluing.
inline int transverse_cocycle(const Triangulation& tri, const TautStructure& taut, int t, int f) {
    const FaceGluing& g = tri.glue[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)];
    return 1 ^ transverse_u(taut, t, f) ^ transverse_u(taut, g.tet, g.perm[f]);
}

}  // namespace detail

/// Breadth-first 2-coloring seeded at tetrahedron 0. Absence (a parity
/// conflict) means the taut structure is not transverse-taut.
inline std::optional<FaceOrientation> transverse_orientation(const Triangulation& tri,
                                                              const TautStructure& taut) {
    std::vector<int> x(static_cast<std::size_t>(tri.n), -1);
    for (int seed = 0; seed < tri.n; ++seed) {
        if (x[static_cast<std::size_t>(seed)] != -1) continue;
        std::vector<int> queue{seed};
        x[static_cast<std::size_t>(seed)] = 0;
        for (std::size_t q = 0; q < queue.size(); ++q) {
            int t = queue[q];
            for (int f = 0; f < 4; ++f) {
                const FaceGluing& g = tri.glue[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)];
                int want = x[static_cast<std::size_t>(t)] ^ detail::transverse_cocycle(tri, taut, t, f);
                if (x[static_cast<std::size_t>(g.tet)] == -1) {
                    x[static_cast<std::size_t>(g.tet)] = want;
                    queue.push_back(g.tet);
                } else if (x[static_cast<std::size_t>(g.tet)] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    FaceOrientation fo;
    fo.out_of.assign(static_cast<std::size_t>(tri.n), {});
    for (int t = 0; t < tri.n; ++t)
        for (int f = 0; f < 4; ++f)
            fo.out_of[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)] =
                (detail::transverse_u(taut, t, f) ^ x[static_cast<std::size_t>(t)]) != 0;
    return fo;
}

/// Taut structure, veering coloring, hinge flags and (if present) the
/// transverse orientation of one triangulation.
struct VeeringData {
    TautStructure taut;
    Coloring coloring;
    std::vector<bool> hinge;
    std::optional<FaceOrientation> transverse;
};

inline VeeringData build_veering(const Triangulation& tri, const EdgeTable& edges,
                                 const CuspComplex& cusp, const TautStructure& taut) {
    VeeringData v;
    v.taut = taut;
    v.coloring = color_edges(tri, edges, cusp, taut);
    check_internal(check_square_model(tri, edges, taut, v.coloring),
                   "fan coloring and square model disagree");
    v.hinge = classify_hinges(tri, edges, taut, v.coloring);
    v.transverse = transverse_orientation(tri, taut);
    return v;
}

/// Double cover with the lifted taut structure. Tetrahedron (t, bit) has
/// index 2t+bit; the bit flips exactly across gluings whose transverse parity
/// is inconsistent, so the lift is transverse-taut.
struct DoubleCover {
    Triangulation tri;
    TautStructure taut;
    int base_n = 0;
    int base_of(int cover_tet) const { return cover_tet / 2; }
    int bit_of(int cover_tet) const { return cover_tet % 2; }
    int lift(int base_tet, int bit) const { return 2 * base_tet + bit; }
    int deck(int cover_tet) const { return cover_tet ^ 1; }
};

namespace detail {

inline DoubleCover build_cover_with_cocycle(const Triangulation& tri, const TautStructure& taut,
                                            const std::vector<std::array<int, 4>>& cocycle) {
    DoubleCover cover;
    cover.base_n = tri.n;
    cover.tri.name = tri.name + "-double";
    cover.tri.n = 2 * tri.n;
    cover.tri.glue.assign(static_cast<std::size_t>(2 * tri.n), {});
    for (int t = 0; t < tri.n; ++t)
        for (int b = 0; b < 2; ++b)
            for (int f = 0; f < 4; ++f) {
                const FaceGluing& g = tri.glue[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)];
                int b2 = b ^ cocycle[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)];
                cover.tri.glue[static_cast<std::size_t>(2 * t + b)][static_cast<std::size_t>(f)] =
                    FaceGluing{2 * g.tet + b2, g.perm};
            }
    validate(cover.tri);
    cover.taut.pi_pair.assign(static_cast<std::size_t>(2 * tri.n), 0);
    for (int t = 0; t < tri.n; ++t)
        for (int b = 0; b < 2; ++b)
            cover.taut.pi_pair[static_cast<std::size_t>(2 * t + b)] = taut.pi_pair[static_cast<std::size_t>(t)];
    return cover;
}

}  // namespace detail

/// The transverse-taut double cover of a non-transverse-taut structure.
inline DoubleCover transverse_double_cover(const Triangulation& tri, const TautStructure& taut) {
    require(!transverse_orientation(tri, taut).has_value(), "already-transverse-taut",
            "the taut structure is transverse-taut; no double cover is needed");
    std::vector<std::array<int, 4>> cocycle(static_cast<std::size_t>(tri.n));
    for (int t = 0; t < tri.n; ++t)
        for (int f = 0; f < 4; ++f)
            cocycle[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)] =
                detail::transverse_cocycle(tri, taut, t, f);
    DoubleCover cover = detail::build_cover_with_cocycle(tri, taut, cocycle);
    check_internal(transverse_orientation(cover.tri, cover.taut).has_value(),
                   "double cover failed to be transverse-taut");
    return cover;
}

/// Pull an angle vector on the base up to the cover.
inline AngleVector lift_angles(const DoubleCover& cover, const AngleVector& theta) {
    AngleVector up = AngleVector::zero(cover.tri.n);
    for (int ct = 0; ct < cover.tri.n; ++ct)
        for (int p = 0; p < 3; ++p) up.at(ct, p) = theta.at(cover.base_of(ct), p);
    return up;
}

/// Average an angle vector on the cover with its deck translate and project
/// to the base. The averaged vector is deck-invariant by construction.
inline AngleVector average_and_project(const DoubleCover& cover, const AngleVector& theta_up) {
    AngleVector down = AngleVector::zero(cover.base_n);
    for (int t = 0; t < cover.base_n; ++t)
        for (int p = 0; p < 3; ++p)
            down.at(t, p) =
                (theta_up.at(cover.lift(t, 0), p) + theta_up.at(cover.lift(t, 1), p)) / Rational(2);
    return down;
}

}  // namespace veering
