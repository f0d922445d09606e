#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "veering/cusp.hpp"

namespace veering {

// Normal curves on the boundary tori: closed, transverse to the 1-skeleton,
// entering and leaving each triangle through different sides. Curves are
// stored as cyclic segment lists; orientation is the list order.

struct CurveSegment {
    int tri = -1;
    int entry = -1;  // side position 0..2
    int exit = -1;
    /// Corner cut off by this segment (sides are opposite same-index corners).
    int cut_corner() const { return 3 - entry - exit; }
    friend bool operator==(const CurveSegment& a, const CurveSegment& b) {
        return a.tri == b.tri && a.entry == b.entry && a.exit == b.exit;
    }
};

struct NormalCurve {
    int component = -1;
    std::vector<CurveSegment> segs;
    bool embedded = false;
    int size() const { return static_cast<int>(segs.size()); }
    NormalCurve reversed() const {
        NormalCurve r;
        r.component = component;
        r.embedded = embedded;
        for (auto it = segs.rbegin(); it != segs.rend(); ++it)
            r.segs.push_back(CurveSegment{it->tri, it->exit, it->entry});
        return r;
    }
};

// Embeddedness is decided exactly: parallel arcs in a triangle nest around
// their cut corner, which pins every crossing position up to one integer
// degree of freedom along the curve; the curve embeds iff some choice keeps
// all positions in range and distinct within each nest.

namespace detail {

/// Corner of the glued triangle identified with corner `u` of side (tri, e).
/// `u` must be an endpoint corner of the side (u != e).
inline std::pair<int, int> paired_corner(const CuspComplex& cusp, int tri, int e, int u) {
    const std::pair<int, int>& mate = cusp.side_mate[static_cast<std::size_t>(tri)][static_cast<std::size_t>(e)];
    return {mate.first,
            cusp.corner_image[static_cast<std::size_t>(tri)][static_cast<std::size_t>(e)][static_cast<std::size_t>(u)]};
}

inline bool curve_embeds(const CuspComplex& cusp, const std::vector<CurveSegment>& segs) {
    int m = static_cast<int>(segs.size());
    // Family sizes per (triangle, cut corner).
    std::map<std::pair<int, int>, int> family;
    for (const CurveSegment& s : segs) ++family[{s.tri, s.cut_corner()}];
    // Crossing counts per 1-cell.
    std::map<int, int> crossings;
    for (const CurveSegment& s : segs)
        ++crossings[cusp.side_class_of[static_cast<std::size_t>(s.tri)][static_cast<std::size_t>(s.exit)]];

    // Depth of segment i relative to segment 0: x_i = off[i] + sgn[i] * x_0.
    std::vector<long long> off(static_cast<std::size_t>(m), 0);
    std::vector<int> sgn(static_cast<std::size_t>(m), 1);
    for (int i = 0; i < m; ++i) {
        const CurveSegment& cur = segs[static_cast<std::size_t>(i)];
        const CurveSegment& nxt = segs[static_cast<std::size_t>((i + 1) % m)];
        int side = cusp.side_class_of[static_cast<std::size_t>(cur.tri)][static_cast<std::size_t>(cur.exit)];
        int n_cross = crossings[side];
        // Where does the cut corner of `cur` land across the gluing?
        std::pair<int, int> img = paired_corner(cusp, cur.tri, cur.exit, cur.cut_corner());
        check_internal(img.first == nxt.tri, "curve_embeds: segment mismatch");
        long long a;
        int b;
        if (img.second == nxt.cut_corner()) {
            a = 0;
            b = 1;  // x_{i+1} = x_i
        } else {
            a = n_cross + 1;
            b = -1;  // x_{i+1} = n_cross + 1 - x_i
        }
        if (i + 1 < m) {
            off[static_cast<std::size_t>(i + 1)] = a + b * off[static_cast<std::size_t>(i)];
            sgn[static_cast<std::size_t>(i + 1)] = b * sgn[static_cast<std::size_t>(i)];
        } else {
            // Closure: x_0 = a + b * x_{m-1}.
            long long ca = a + b * off[static_cast<std::size_t>(m - 1)];
            int cb = b * sgn[static_cast<std::size_t>(m - 1)];
            int max_family = 1;
            for (const auto& kv : family) max_family = std::max(max_family, kv.second);
            for (long long x0 = 1; x0 <= max_family; ++x0) {
                if (cb == 1 && ca != 0) break;                  // x0 = ca + x0 needs ca == 0
                if (cb == -1 && 2 * x0 != ca) continue;         // x0 = ca - x0
                // Evaluate all depths, check ranges and per-family distinctness.
                std::map<std::pair<int, int>, std::vector<long long>> used;
                bool ok = true;
                for (int j = 0; j < m && ok; ++j) {
                    long long xj = off[static_cast<std::size_t>(j)] + sgn[static_cast<std::size_t>(j)] * x0;
                    const CurveSegment& s = segs[static_cast<std::size_t>(j)];
                    int fam = family[{s.tri, s.cut_corner()}];
                    if (xj < 1 || xj > fam) ok = false;
                    if (ok) used[{s.tri, s.cut_corner()}].push_back(xj);
                }
                for (auto& kv : used) {
                    std::sort(kv.second.begin(), kv.second.end());
                    ok = ok && std::adjacent_find(kv.second.begin(), kv.second.end()) == kv.second.end();
                }
                if (ok) return true;
            }
            return false;
        }
    }
    return false;  // unreachable for m >= 1
}

}  // namespace detail

inline NormalCurve make_normal_curve(const CuspComplex& cusp, std::vector<CurveSegment> segs) {
    require(!segs.empty(), "curve", "normal curve has no segments");
    int m = static_cast<int>(segs.size());
    int component = cusp.component_of_tri[static_cast<std::size_t>(segs.front().tri)];
    for (int i = 0; i < m; ++i) {
        const CurveSegment& cur = segs[static_cast<std::size_t>(i)];
        require(cur.entry >= 0 && cur.entry < 3 && cur.exit >= 0 && cur.exit < 3 && cur.entry != cur.exit,
                "curve", "segment " + std::to_string(i) + " does not cross its triangle");
        require(cusp.component_of_tri[static_cast<std::size_t>(cur.tri)] == component, "curve",
                "curve leaves its boundary component");
        const CurveSegment& nxt = segs[static_cast<std::size_t>((i + 1) % m)];
        const std::pair<int, int>& mate =
            cusp.side_mate[static_cast<std::size_t>(cur.tri)][static_cast<std::size_t>(cur.exit)];
        require(mate == std::make_pair(nxt.tri, nxt.entry), "curve",
                "segment " + std::to_string(i) + " does not continue into segment " +
                    std::to_string((i + 1) % m));
    }
    NormalCurve out;
    out.component = component;
    out.segs = std::move(segs);
    out.embedded = detail::curve_embeds(cusp, out.segs);
    return out;
}

/// Loop around a cusp vertex. Clockwise is the reverse of the stored
/// counterclockwise link order.
inline NormalCurve vertex_loop(const CuspComplex& cusp, int vertex, bool clockwise = true) {
    const CuspVertex& vx = cusp.vertices[static_cast<std::size_t>(vertex)];
    int m = vx.degree();
    require(m >= 2, "curve", "vertex loop needs a link of at least two corners");
    std::vector<CurveSegment> segs;
    if (!clockwise) {
        // Counterclockwise: corner j entered across slot j-1, left across slot j.
        for (int j = 0; j < m; ++j) {
            const std::pair<int, int>& prev_exit = vx.exit_inst[static_cast<std::size_t>((j + m - 1) % m)];
            std::pair<int, int> entry = cusp.side_mate[static_cast<std::size_t>(prev_exit.first)]
                                                      [static_cast<std::size_t>(prev_exit.second)];
            const std::pair<int, int>& exit = vx.exit_inst[static_cast<std::size_t>(j)];
            check_internal(entry.first == exit.first, "vertex loop: segment triangles disagree");
            segs.push_back(CurveSegment{entry.first, entry.second, exit.second});
        }
    } else {
        // Clockwise: corner j entered across slot j, left across slot j-1.
        for (int j = m - 1; j >= 0; --j) {
            const std::pair<int, int>& entry = vx.exit_inst[static_cast<std::size_t>(j)];
            const std::pair<int, int>& prev_exit = vx.exit_inst[static_cast<std::size_t>((j + m - 1) % m)];
            std::pair<int, int> exit = cusp.side_mate[static_cast<std::size_t>(prev_exit.first)]
                                                     [static_cast<std::size_t>(prev_exit.second)];
            check_internal(entry.first == exit.first, "vertex loop: segment triangles disagree");
            segs.push_back(CurveSegment{entry.first, entry.second, exit.second});
        }
    }
    return make_normal_curve(cusp, std::move(segs));
}

}  // namespace veering
