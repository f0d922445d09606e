#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "veering/curves.hpp"
#include "veering/cusp.hpp"

namespace veering {

// First homology of the cusp tori and intersection numbers.
//
// 1-cycles are stored two ways: as integer chains over the 1-cells (enough
// for intersection pairing) and as closed walks of directed 1-cells (enough
// to produce a transverse "push-off" normal curve running along the left of
// the walk). A normal curve maps to a homologous chain by routing every
// segment through its cut corner. The intersection pairing is computed by
// counting, with signs, the crossings of a transverse curve through 1-cells
// weighted by the chain: positive when the chain's canonical direction looks
// counterclockwise from the triangle being entered.

struct EdgeChain {
    std::vector<long long> mult;  // per 1-cell id
};

struct WalkStep {
    int side = -1;
    int dir = +1;  // +1: canonical tail -> head
};

struct CycleWalk {
    std::vector<WalkStep> steps;
};

namespace detail {

/// Which end (0 = canonical tail, 1 = head) of its 1-cell the corner
/// (tri, cpos) of side instance (tri, k) sits at.
inline int side_end_of_corner(const CuspComplex& cusp, int tri, int k, int cpos) {
    const CuspSide& s = cusp.sides[static_cast<std::size_t>(
        cusp.side_class_of[static_cast<std::size_t>(tri)][static_cast<std::size_t>(k)])];
    int canon_pos = cpos;
    if (!(s.tri0 == tri && s.k0 == k)) {
        check_internal(s.tri1 == tri && s.k1 == k, "side_end_of_corner: not an instance");
        canon_pos = cusp.corner_image[static_cast<std::size_t>(tri)][static_cast<std::size_t>(k)]
                                     [static_cast<std::size_t>(cpos)];
    }
    std::array<int, 2> ends = CuspComplex::side_corner_pos(s.k0);
    check_internal(canon_pos == ends[0] || canon_pos == ends[1], "corner not on this side");
    return canon_pos == ends[0] ? 0 : 1;
}

}  // namespace detail

/// Homologous chain of a normal curve: each crossing is pushed to the cut
/// corner's end of the crossed 1-cell, and the connecting runs along 1-cells
/// are recorded.
inline EdgeChain chain_of_curve(const CuspComplex& cusp, const NormalCurve& curve) {
    EdgeChain chain;
    chain.mult.assign(cusp.sides.size(), 0);
    int m = curve.size();
    for (int i = 0; i < m; ++i) {
        const CurveSegment& cur = curve.segs[static_cast<std::size_t>(i)];
        const CurveSegment& nxt = curve.segs[static_cast<std::size_t>((i + 1) % m)];
        int side = cusp.side_class_of[static_cast<std::size_t>(cur.tri)][static_cast<std::size_t>(cur.exit)];
        int end_a = detail::side_end_of_corner(cusp, cur.tri, cur.exit, cur.cut_corner());
        int end_b = detail::side_end_of_corner(cusp, nxt.tri, nxt.entry, nxt.cut_corner());
        if (end_a == 0 && end_b == 1)
            chain.mult[static_cast<std::size_t>(side)] += 1;
        else if (end_a == 1 && end_b == 0)
            chain.mult[static_cast<std::size_t>(side)] -= 1;
    }
    return chain;
}

inline EdgeChain chain_of_walk(const CuspComplex& cusp, const CycleWalk& walk) {
    EdgeChain chain;
    chain.mult.assign(cusp.sides.size(), 0);
    for (const WalkStep& st : walk.steps) chain.mult[static_cast<std::size_t>(st.side)] += st.dir;
    return chain;
}

/// Transverse curve along the left side of a closed reduced walk. At each
/// vertex the curve sweeps clockwise through the corners strictly between the
/// arrival and departure slots. If the left push-off never crosses the
/// 1-skeleton (the walk bounds a triangle on its left), the right push-off is
/// used instead.
inline NormalCurve push_off(const CuspComplex& cusp, const CycleWalk& walk) {
    require(!walk.steps.empty(), "curve", "cannot push off an empty walk");
    int m = static_cast<int>(walk.steps.size());

    auto build = [&](bool left) -> std::vector<CurveSegment> {
        // Crossings as (from_tri, from_pos, into_tri, into_pos).
        struct Crossing {
            int from_tri, from_pos, into_tri, into_pos;
        };
        std::vector<Crossing> crossings;
        for (int i = 0; i < m; ++i) {
            const WalkStep& in = walk.steps[static_cast<std::size_t>(i)];
            const WalkStep& out = walk.steps[static_cast<std::size_t>((i + 1) % m)];
            std::pair<int, int> arrive = cusp.side_end_slot(in.side, in.dir == 1 ? 1 : 0);
            std::pair<int, int> depart = cusp.side_end_slot(out.side, out.dir == 1 ? 0 : 1);
            check_internal(arrive.first == depart.first, "walk is not connected at a vertex");
            int v = arrive.first;
            const CuspVertex& vx = cusp.vertices[static_cast<std::size_t>(v)];
            int deg = vx.degree();
            int alpha = arrive.second, beta = depart.second;
            require(alpha != beta, "curve", "walk backtracks at a vertex");
            if (left) {
                // Sweep clockwise: cross slots alpha-1, alpha-2, ..., beta+1.
                for (int j = (alpha - 1 + deg) % deg; j != beta; j = (j + deg - 1) % deg) {
                    const std::pair<int, int>& inst = vx.exit_inst[static_cast<std::size_t>(j)];
                    std::pair<int, int> mate =
                        cusp.side_mate[static_cast<std::size_t>(inst.first)][static_cast<std::size_t>(inst.second)];
                    // Clockwise crossing of slot j: from corner j+1's triangle
                    // into corner j's triangle.
                    crossings.push_back(Crossing{mate.first, mate.second, inst.first, inst.second});
                }
            } else {
                // Sweep counterclockwise on the right: cross slots alpha+1,
                // ..., beta-1, entering corner (j+1)'s triangle.
                for (int j = (alpha + 1) % deg; j != beta; j = (j + 1) % deg) {
                    const std::pair<int, int>& inst = vx.exit_inst[static_cast<std::size_t>(j)];
                    std::pair<int, int> mate =
                        cusp.side_mate[static_cast<std::size_t>(inst.first)][static_cast<std::size_t>(inst.second)];
                    crossings.push_back(Crossing{inst.first, inst.second, mate.first, mate.second});
                }
            }
        }
        // Cancel spurs: entering a triangle and immediately leaving through
        // the same side instance is an isotopy across that side, not a
        // crossing. Repeat until stable.
        bool changed = true;
        while (changed && !crossings.empty()) {
            changed = false;
            int c = static_cast<int>(crossings.size());
            for (int r = 0; r < c; ++r) {
                const Crossing& cur = crossings[static_cast<std::size_t>(r)];
                const Crossing& nxt = crossings[static_cast<std::size_t>((r + 1) % c)];
                if (cur.into_tri == nxt.from_tri && cur.into_pos == nxt.from_pos) {
                    if ((r + 1) % c == r) break;
                    int hi = std::max(r, (r + 1) % c), lo = std::min(r, (r + 1) % c);
                    crossings.erase(crossings.begin() + hi);
                    crossings.erase(crossings.begin() + lo);
                    changed = true;
                    break;
                }
            }
        }
        std::vector<CurveSegment> segs;
        int c = static_cast<int>(crossings.size());
        for (int r = 0; r < c; ++r) {
            const Crossing& cur = crossings[static_cast<std::size_t>(r)];
            const Crossing& nxt = crossings[static_cast<std::size_t>((r + 1) % c)];
            check_internal(cur.into_tri == nxt.from_tri, "push-off crossings do not chain up");
            segs.push_back(CurveSegment{cur.into_tri, cur.into_pos, nxt.from_pos});
        }
        return segs;
    };

    std::vector<CurveSegment> segs = build(true);
    if (segs.empty()) segs = build(false);
    check_internal(!segs.empty(), "push-off of a walk with no crossings on either side");
    return make_normal_curve(cusp, std::move(segs));
}

/// Signed count of the crossings of a transverse curve against a chain:
/// +mult per crossing leaving through the canonical instance of the 1-cell,
/// -mult per crossing entering through it. The sign is pinned so that a
/// deformation along gamma shifts holonomy by +2t times this pairing.
inline long long intersection_chain_curve(const CuspComplex& cusp, const EdgeChain& chain,
                                          const NormalCurve& curve) {
    long long total = 0;
    for (const CurveSegment& s : curve.segs) {
        std::pair<int, int> mate =
            cusp.side_mate[static_cast<std::size_t>(s.tri)][static_cast<std::size_t>(s.exit)];
        int side = cusp.side_class_of[static_cast<std::size_t>(s.tri)][static_cast<std::size_t>(s.exit)];
        const CuspSide& sc = cusp.sides[static_cast<std::size_t>(side)];
        int sign = (mate.first == sc.tri0 && mate.second == sc.k0) ? -1 : 1;
        total += sign * chain.mult[static_cast<std::size_t>(side)];
    }
    return total;
}

/// Basis of the first homology of each torus: two fundamental cycles of the
/// lexicographically least spanning tree whose intersection number is +1,
/// stored with embedded transverse representatives.
struct TorusBasis {
    int torus = -1;
    CycleWalk walk1, walk2;
    EdgeChain chain1, chain2;
    NormalCurve rep1, rep2;
};

struct HomologyBasis {
    std::vector<TorusBasis> tori;  // indexed by component id

    /// Class of a normal curve in its torus basis: curve ~ a*B1 + b*B2.
    std::pair<long long, long long> curve_class(const CuspComplex& cusp,
                                                const NormalCurve& curve) const {
        const TorusBasis& tb = tori[static_cast<std::size_t>(curve.component)];
        long long a = -intersection_chain_curve(cusp, tb.chain2, curve);
        long long b = intersection_chain_curve(cusp, tb.chain1, curve);
        return {a, b};
    }
};

namespace detail {

/// Endpoint vertices of a 1-cell in canonical direction.
inline std::pair<int, int> side_endpoints(const CuspComplex& cusp, int side) {
    const CuspSide& s = cusp.sides[static_cast<std::size_t>(side)];
    std::array<int, 2> cpos = CuspComplex::side_corner_pos(s.k0);
    return {cusp.vertex_at(s.tri0, cpos[0]), cusp.vertex_at(s.tri0, cpos[1])};
}

}  // namespace detail

inline HomologyBasis homology_basis(const CuspComplex& cusp) {
    HomologyBasis out;
    out.tori.assign(cusp.components.size(), {});
    for (const CuspTorus& torus : cusp.components) {
        // Lexicographically least spanning tree over the torus graph.
        std::vector<int> parent_vertex(cusp.vertices.size(), -1);
        std::vector<int> parent_side(cusp.vertices.size(), -1);
        std::vector<int> parent_dir(cusp.vertices.size(), 0);
        std::vector<int> comp(cusp.vertices.size());
        std::iota(comp.begin(), comp.end(), 0);
        auto find = [&](int v) {
            while (comp[static_cast<std::size_t>(v)] != v) v = comp[static_cast<std::size_t>(v)];
            return v;
        };
        std::vector<int> tree_sides, loose_sides;
        for (int sid : torus.sides) {
            auto [u, w] = detail::side_endpoints(cusp, sid);
            int ru = find(u), rw = find(w);
            if (ru != rw) {
                comp[static_cast<std::size_t>(ru)] = rw;
                tree_sides.push_back(sid);
            } else {
                loose_sides.push_back(sid);
            }
        }
        // Orient the tree from a root by a deterministic traversal.
        int root = *std::min_element(torus.verts.begin(), torus.verts.end());
        std::vector<std::vector<std::pair<int, int>>> adj(cusp.vertices.size());  // (side, dir from tail side)
        for (int sid : tree_sides) {
            auto [u, w] = detail::side_endpoints(cusp, sid);
            adj[static_cast<std::size_t>(u)].push_back({sid, +1});
            adj[static_cast<std::size_t>(w)].push_back({sid, -1});
        }
        for (auto& a : adj) std::sort(a.begin(), a.end());
        std::vector<int> stack{root};
        std::vector<bool> seen(cusp.vertices.size(), false);
        seen[static_cast<std::size_t>(root)] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& [sid, dir] : adj[static_cast<std::size_t>(v)]) {
                auto [u, w] = detail::side_endpoints(cusp, sid);
                int other = dir == 1 ? w : u;
                if (seen[static_cast<std::size_t>(other)]) continue;
                seen[static_cast<std::size_t>(other)] = true;
                parent_vertex[static_cast<std::size_t>(other)] = v;
                parent_side[static_cast<std::size_t>(other)] = sid;
                parent_dir[static_cast<std::size_t>(other)] = dir;  // dir of sid walked v -> other
                stack.push_back(other);
            }
        }
        // Fundamental cycle of a non-tree side: the side then the tree path
        // from its head back to its tail.
        auto tree_path_to_root = [&](int v) {
            std::vector<WalkStep> up;  // v -> root
            while (parent_vertex[static_cast<std::size_t>(v)] != -1) {
                up.push_back(WalkStep{parent_side[static_cast<std::size_t>(v)],
                                      -parent_dir[static_cast<std::size_t>(v)]});
                v = parent_vertex[static_cast<std::size_t>(v)];
            }
            return up;
        };
        auto fundamental = [&](int sid) {
            auto [u, w] = detail::side_endpoints(cusp, sid);
            CycleWalk walk;
            walk.steps.push_back(WalkStep{sid, +1});  // u -> w
            std::vector<WalkStep> w_up = tree_path_to_root(w);
            std::vector<WalkStep> u_up = tree_path_to_root(u);
            // Strip the common suffix (path above the meet vertex).
            while (!w_up.empty() && !u_up.empty() && w_up.back().side == u_up.back().side) {
                w_up.pop_back();
                u_up.pop_back();
            }
            for (const WalkStep& st : w_up) walk.steps.push_back(st);
            for (auto it = u_up.rbegin(); it != u_up.rend(); ++it)
                walk.steps.push_back(WalkStep{it->side, -it->dir});
            return walk;
        };

        std::vector<CycleWalk> cycles;
        for (int sid : loose_sides) cycles.push_back(fundamental(sid));
        std::vector<NormalCurve> reps;
        std::vector<EdgeChain> chains;
        for (const CycleWalk& cw : cycles) {
            reps.push_back(push_off(cusp, cw));
            chains.push_back(chain_of_walk(cusp, cw));
        }
        int pick1 = -1, pick2 = -1;
        long long pairing = 0;
        for (std::size_t i = 0; i < cycles.size() && pick1 < 0; ++i)
            for (std::size_t j = i + 1; j < cycles.size() && pick1 < 0; ++j) {
                long long p = intersection_chain_curve(cusp, chains[i], reps[j]);
                if (p == 1 || p == -1) {
                    pick1 = static_cast<int>(i);
                    pick2 = static_cast<int>(j);
                    pairing = p;
                }
            }
        check_internal(pick1 >= 0,
                       "no unimodular pair among the fundamental cycles of torus " +
                           std::to_string(torus.id));
        TorusBasis tb;
        tb.torus = torus.id;
        tb.walk1 = cycles[static_cast<std::size_t>(pick1)];
        tb.chain1 = chains[static_cast<std::size_t>(pick1)];
        tb.rep1 = reps[static_cast<std::size_t>(pick1)];
        tb.walk2 = cycles[static_cast<std::size_t>(pick2)];
        tb.chain2 = chains[static_cast<std::size_t>(pick2)];
        tb.rep2 = reps[static_cast<std::size_t>(pick2)];
        if (pairing == -1) {
            // Reverse the second cycle so that i(B1, B2) = +1.
            for (WalkStep& st : tb.walk2.steps) st.dir = -st.dir;
            std::reverse(tb.walk2.steps.begin(), tb.walk2.steps.end());
            for (long long& x : tb.chain2.mult) x = -x;
            tb.rep2 = tb.rep2.reversed();
        }
        check_internal(intersection_chain_curve(cusp, tb.chain1, tb.rep2) == 1,
                       "basis normalization failed");
        out.tori[static_cast<std::size_t>(torus.id)] = std::move(tb);
    }
    return out;
}

}  // namespace veering
