#pragma once

#include <algorithm>
#include <vector>

#include "veering/coloring.hpp"
#include "veering/cusp.hpp"

namespace veering {

// Ladder decomposition of the cusp tori of a veering structure. Sides whose
// endpoint vertices share a color are ladderpole segments; they form disjoint
// essential curves covering all vertices, and the complementary annuli are
// the ladders. Every cusp triangle has exactly one pole side (adjacent to its
// wide corner); the side opposite the wide corner is its base. Crossing bases
// walks one way along the ladder strip, crossing the remaining rung walks the
// other way ("wide-ward"); with a transverse orientation, wide-ward is up in
// ascending ladders and down in descending ones.

struct PoleCurve {
    int id = -1;
    int component = -1;
    Color color = Color::red;      // color of the vertices it joins
    std::vector<int> verts;        // cyclic
    std::vector<int> sides;        // sides[i] joins verts[i] to verts[i+1]
    std::vector<int> dir;          // +1 if the canonical 1-cell direction agrees
    int length() const { return static_cast<int>(sides.size()); }
};

struct Ladder {
    int id = -1;
    int component = -1;
    std::vector<int> strip;  // triangle ids in wide-ward cyclic order
    int pole_a = -1, pole_b = -1;
    bool has_orientation = false;
    bool ascending = false;  // relative to the transverse orientation
    int size() const { return static_cast<int>(strip.size()); }
};

struct LadderDecomposition {
    std::vector<PoleCurve> poles;
    std::vector<Ladder> ladders;
    std::vector<int> ladder_of_tri;     // 4n
    std::vector<int> strip_pos_of_tri;  // index into its ladder's strip
    std::vector<int> pole_of_vertex;
    std::vector<int> wide_pos;   // per triangle: wide corner position
    std::vector<int> pole_pos;   // per triangle: pole side position
    std::vector<int> rung_pos;   // per triangle: wide-adjacent rung position
    std::vector<int> height;     // per triangle: base-crossings to the nearest hinge
    std::vector<std::vector<int>> ladder_order;  // per component, cyclic

    int base_pos(int tri) const { return wide_pos[static_cast<std::size_t>(tri)]; }
    /// Neighbor one base-crossing away (down in an ascending ladder).
    std::pair<int, int> down_step(const CuspComplex& cusp, int tri) const {
        return cusp.side_mate[static_cast<std::size_t>(tri)][static_cast<std::size_t>(base_pos(tri))];
    }
    /// Neighbor across the wide-adjacent rung (up in an ascending ladder).
    std::pair<int, int> up_step(const CuspComplex& cusp, int tri) const {
        return cusp.side_mate[static_cast<std::size_t>(tri)][static_cast<std::size_t>(rung_pos[static_cast<std::size_t>(tri)])];
    }
};

inline LadderDecomposition build_ladders(const Triangulation& tri, const EdgeTable& edges,
                                         const CuspComplex& cusp, const VeeringData& veering) {
    (void)tri;
    (void)edges;
    LadderDecomposition L;
    int ntri = 4 * cusp.n;

    auto vertex_color = [&](int v) {
        return veering.coloring.edge[static_cast<std::size_t>(cusp.vertices[static_cast<std::size_t>(v)].edge_class)];
    };
    std::vector<bool> side_is_pole(cusp.sides.size());
    for (const CuspSide& s : cusp.sides) {
        std::array<int, 2> cpos = CuspComplex::side_corner_pos(s.k0);
        int va = cusp.vertex_at(s.tri0, cpos[0]);
        int vb = cusp.vertex_at(s.tri0, cpos[1]);
        side_is_pole[static_cast<std::size_t>(s.id)] = vertex_color(va) == vertex_color(vb);
    }

    // Per-triangle side roles.
    L.wide_pos.assign(static_cast<std::size_t>(ntri), -1);
    L.pole_pos.assign(static_cast<std::size_t>(ntri), -1);
    L.rung_pos.assign(static_cast<std::size_t>(ntri), -1);
    for (int id = 0; id < ntri; ++id) {
        int t = cusp.tet_of(id);
        int pi_slot = 3 * t + veering.taut.pi_pair[static_cast<std::size_t>(t)];
        int kw = -1;
        for (int k = 0; k < 3; ++k)
            if (cusp.slot_of(id, k) == pi_slot) kw = k;
        check_internal(kw >= 0, "cusp triangle without a wide corner");
        L.wide_pos[static_cast<std::size_t>(id)] = kw;
        int kp = -1;
        for (int k = 0; k < 3; ++k) {
            int cls = cusp.side_class_of[static_cast<std::size_t>(id)][static_cast<std::size_t>(k)];
            if (!side_is_pole[static_cast<std::size_t>(cls)]) continue;
            check_internal(kp == -1, "cusp triangle with two pole sides");
            kp = k;
        }
        check_internal(kp >= 0, "cusp triangle without a pole side");
        check_internal(kp != kw, "pole side opposite the wide corner");
        L.pole_pos[static_cast<std::size_t>(id)] = kp;
        L.rung_pos[static_cast<std::size_t>(id)] = 3 - kw - kp;
    }

    // Pole curves: every vertex has exactly two pole slots.
    L.pole_of_vertex.assign(cusp.vertices.size(), -1);
    std::vector<std::array<int, 2>> pole_slots(cusp.vertices.size(), {-1, -1});
    for (const CuspVertex& vx : cusp.vertices) {
        int found = 0;
        for (int j = 0; j < vx.degree(); ++j) {
            int cls = cusp.side_at_slot(vx.id, j);
            if (side_is_pole[static_cast<std::size_t>(cls)]) {
                check_internal(found < 2, "vertex with more than two pole slots");
                pole_slots[static_cast<std::size_t>(vx.id)][static_cast<std::size_t>(found++)] = j;
            }
        }
        check_internal(found == 2, "vertex with fewer than two pole slots");
    }
    std::vector<bool> side_done(cusp.sides.size(), false);
    for (const CuspSide& seed : cusp.sides) {
        if (!side_is_pole[static_cast<std::size_t>(seed.id)] || side_done[static_cast<std::size_t>(seed.id)]) continue;
        PoleCurve pole;
        pole.id = static_cast<int>(L.poles.size());
        pole.component = seed.component;
        // Walk: start at the canonical tail of the seed, repeatedly leave the
        // current vertex through its other pole slot.
        int v = cusp.vertex_at(seed.tri0, CuspComplex::side_corner_pos(seed.k0)[0]);
        int side = seed.id;
        int dir = 1;
        pole.color = vertex_color(v);
        do {
            pole.verts.push_back(v);
            pole.sides.push_back(side);
            pole.dir.push_back(dir);
            side_done[static_cast<std::size_t>(side)] = true;
            check_internal(vertex_color(v) == pole.color, "pole changes vertex color");
            L.pole_of_vertex[static_cast<std::size_t>(v)] = pole.id;
            // Head of `side` when walked from v with direction dir.
            const CuspSide& s = cusp.sides[static_cast<std::size_t>(side)];
            std::array<int, 2> cpos = CuspComplex::side_corner_pos(s.k0);
            int head = cusp.vertex_at(s.tri0, cpos[dir == 1 ? 1 : 0]);
            int tail = cusp.vertex_at(s.tri0, cpos[dir == 1 ? 0 : 1]);
            check_internal(tail == v, "pole walk lost its tail vertex");
            // Choose the next side: the other pole slot at `head`... except a
            // loop side occupies two slots; step to whichever slot is not the
            // end we arrived through.
            std::pair<int, int> arrive = cusp.side_end_slot(side, dir == 1 ? 1 : 0);
            check_internal(arrive.first == head, "pole walk arrival mismatch");
            const std::array<int, 2>& slots = pole_slots[static_cast<std::size_t>(head)];
            int next_slot = slots[0] == arrive.second ? slots[1] : slots[0];
            check_internal(next_slot != arrive.second, "pole walk stuck at a vertex");
            int next_side = cusp.side_at_slot(head, next_slot);
            // Direction of the next side: +1 if its canonical tail end sits at
            // this very slot.
            std::pair<int, int> tail_slot = cusp.side_end_slot(next_side, 0);
            int next_dir = (tail_slot == std::make_pair(head, next_slot)) ? 1 : -1;
            v = head;
            side = next_side;
            dir = next_dir;
        } while (!(side == seed.id && dir == 1 &&
                   v == cusp.vertex_at(seed.tri0, CuspComplex::side_corner_pos(seed.k0)[0])));
        L.poles.push_back(std::move(pole));
    }
    for (int pv : L.pole_of_vertex) check_internal(pv >= 0, "vertex not on any pole");

    // Ladders: strips closed under wide-ward steps.
    L.ladder_of_tri.assign(static_cast<std::size_t>(ntri), -1);
    L.strip_pos_of_tri.assign(static_cast<std::size_t>(ntri), -1);
    for (int seed = 0; seed < ntri; ++seed) {
        if (L.ladder_of_tri[static_cast<std::size_t>(seed)] >= 0) continue;
        Ladder ladder;
        ladder.id = static_cast<int>(L.ladders.size());
        ladder.component = cusp.component_of_tri[static_cast<std::size_t>(seed)];
        int cur = seed;
        do {
            L.ladder_of_tri[static_cast<std::size_t>(cur)] = ladder.id;
            L.strip_pos_of_tri[static_cast<std::size_t>(cur)] = ladder.size();
            ladder.strip.push_back(cur);
            std::pair<int, int> nxt = L.up_step(cusp, cur);
            // The wide-adjacent rung of one triangle is the base of the next.
            check_internal(nxt.second == L.base_pos(nxt.first),
                           "ladder strip direction is inconsistent");
            cur = nxt.first;
            check_internal(ladder.size() <= ntri, "ladder strip failed to close");
        } while (cur != seed);
        // The two adjacent poles.
        std::vector<int> touched;
        for (int id : ladder.strip) {
            int kp = L.pole_pos[static_cast<std::size_t>(id)];
            int side = cusp.side_class_of[static_cast<std::size_t>(id)][static_cast<std::size_t>(kp)];
            std::array<int, 2> cpos = CuspComplex::side_corner_pos(
                cusp.sides[static_cast<std::size_t>(side)].k0);
            touched.push_back(L.pole_of_vertex[static_cast<std::size_t>(
                cusp.vertex_at(cusp.sides[static_cast<std::size_t>(side)].tri0, cpos[0]))]);
        }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        check_internal(touched.size() == 2, "ladder does not touch exactly two poles");
        ladder.pole_a = touched[0];
        ladder.pole_b = touched[1];
        check_internal(L.poles[static_cast<std::size_t>(ladder.pole_a)].color !=
                           L.poles[static_cast<std::size_t>(ladder.pole_b)].color,
                       "ladder poles have equal colors");
        if (veering.transverse) {
            for (int id : ladder.strip) {
                int t = cusp.tet_of(id);
                int base_face = cusp.ccw[static_cast<std::size_t>(id)][static_cast<std::size_t>(L.base_pos(id))];
                bool asc = !veering.transverse->outward(t, base_face);
                if (id == ladder.strip.front()) {
                    ladder.ascending = asc;
                    ladder.has_orientation = true;
                } else {
                    check_internal(asc == ladder.ascending, "mixed ladder orientation");
                }
            }
        }
        L.ladders.push_back(std::move(ladder));
    }

    // Cyclic order of the ladders around each torus, alternating in
    // orientation when one is present; the count is even because the pole
    // colors alternate.
    L.ladder_order.assign(cusp.components.size(), {});
    std::vector<std::vector<int>> ladders_at_pole(L.poles.size());
    for (const Ladder& ld : L.ladders) {
        ladders_at_pole[static_cast<std::size_t>(ld.pole_a)].push_back(ld.id);
        ladders_at_pole[static_cast<std::size_t>(ld.pole_b)].push_back(ld.id);
    }
    for (std::vector<int>& v : ladders_at_pole)
        check_internal(v.size() == 2, "pole without exactly two adjacent ladders");
    for (const CuspTorus& torus : cusp.components) {
        int first = -1;
        for (const Ladder& ld : L.ladders)
            if (ld.component == torus.id && (first == -1 || ld.id < first)) first = ld.id;
        check_internal(first >= 0, "torus without ladders");
        std::vector<int>& order = L.ladder_order[static_cast<std::size_t>(torus.id)];
        int cur = first;
        int via = L.ladders[static_cast<std::size_t>(cur)].pole_a;
        do {
            order.push_back(cur);
            const std::vector<int>& pair = ladders_at_pole[static_cast<std::size_t>(via)];
            int nxt = pair[0] == cur ? pair[1] : pair[0];
            const Ladder& nl = L.ladders[static_cast<std::size_t>(nxt)];
            via = nl.pole_a == via ? nl.pole_b : nl.pole_a;
            cur = nxt;
            check_internal(order.size() <= L.ladders.size(), "ladder order failed to close");
        } while (cur != first);
        check_internal(order.size() % 2 == 0, "odd number of ladders on a torus");
        if (veering.transverse)
            for (std::size_t i = 0; i < order.size(); ++i)
                check_internal(L.ladders[static_cast<std::size_t>(order[i])].ascending !=
                                   L.ladders[static_cast<std::size_t>(order[(i + 1) % order.size()])].ascending,
                               "ladder orientations do not alternate");
    }

    // Heights: distance to the nearest hinge against the wide-ward direction.
    L.height.assign(static_cast<std::size_t>(ntri), -1);
    for (int id = 0; id < ntri; ++id) {
        int cur = id, steps = 0;
        while (!veering.hinge[static_cast<std::size_t>(cusp.tet_of(cur))]) {
            cur = L.down_step(cusp, cur).first;
            ++steps;
            require(steps <= ntri, "no-hinge-in-ladder",
                    "ladder of triangle " + std::to_string(id) + " contains no hinge triangle");
        }
        L.height[static_cast<std::size_t>(id)] = steps;
    }
    return L;
}

/// Largest height among triangles of ascending ladders; needs a transverse
/// orientation.
inline int max_ascending_height(const LadderDecomposition& L) {
    int d = 0;
    for (const Ladder& ld : L.ladders) {
        check_internal(ld.has_orientation, "max_ascending_height without transverse data");
        if (!ld.ascending) continue;
        for (int id : ld.strip) d = std::max(d, L.height[static_cast<std::size_t>(id)]);
    }
    return d;
}

}  // namespace veering
