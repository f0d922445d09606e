#pragma once

#include <map>
#include <set>
#include <vector>

#include "veering/deform.hpp"
#include "veering/homology.hpp"
#include "veering/pipeline.hpp"
#include "veering/rescue.hpp"

namespace veering {

// Angular holonomy: the turning angle of a normal curve is the sum of the
// angles cut off on its left minus those on its right. For embedded curves it
// depends only on the homology class, giving a linear functional per torus;
// the constructions below push that functional to prescribed values while
// keeping all angles nonnegative.

/// Left-minus-right angle sum along a normal curve, as a coefficient of pi.
/// A segment's cut corner lies on the right exactly when exit = entry + 1
/// in the counterclockwise side numbering.
inline Rational turning_angle(const CuspComplex& cusp, const AngleVector& theta,
                              const NormalCurve& curve) {
    Rational total(0);
    for (const CurveSegment& s : curve.segs) {
        const Rational& angle = theta.a[static_cast<std::size_t>(cusp.slot_of(s.tri, s.cut_corner()))];
        if (s.exit == (s.entry + 1) % 3)
            total -= angle;  // cut corner on the right
        else
            total += angle;
    }
    return total;
}

/// Holonomy of a homology class (a, b) in a torus basis, by linear extension
/// from the stored embedded representatives.
inline Rational holonomy(const CuspComplex& cusp, const HomologyBasis& basis,
                         const AngleVector& theta, int torus, long long a, long long b) {
    const TorusBasis& tb = basis.tori[static_cast<std::size_t>(torus)];
    return Rational(a) * turning_angle(cusp, theta, tb.rep1) +
           Rational(b) * turning_angle(cusp, theta, tb.rep2);
}

/// Holonomy values on both basis classes of every torus.
inline std::vector<std::pair<Rational, Rational>> holonomy_functional(const Analysis& a,
                                                                      const AngleVector& theta) {
    std::vector<std::pair<Rational, Rational>> out;
    for (const TorusBasis& tb : a.basis.tori)
        out.emplace_back(turning_angle(a.cusp, theta, tb.rep1),
                         turning_angle(a.cusp, theta, tb.rep2));
    return out;
}

namespace detail {

/// Strip loop of a ladder: the closed curve through all its triangles that
/// enters across a wide-adjacent side and leaves across the thin-thin base.
inline NormalCurve ladder_loop(const Analysis& a, int ladder_id) {
    const Ladder& ld = a.ladders.ladders[static_cast<std::size_t>(ladder_id)];
    std::vector<CurveSegment> segs;
    for (int i = ld.size() - 1; i >= 0; --i) {
        int id = ld.strip[static_cast<std::size_t>(i)];
        segs.push_back(CurveSegment{id, a.ladders.rung_pos[static_cast<std::size_t>(id)],
                                    a.ladders.base_pos(id)});
    }
    return make_normal_curve(a.cusp, std::move(segs));
}

/// Oriented push-off of a pole curve.
inline NormalCurve pole_rep(const Analysis& a, int pole_id, int orientation = +1) {
    const PoleCurve& p = a.ladders.poles[static_cast<std::size_t>(pole_id)];
    CycleWalk walk;
    for (std::size_t i = 0; i < p.sides.size(); ++i)
        walk.steps.push_back(WalkStep{p.sides[i], p.dir[i]});
    NormalCurve rep = push_off(a.cusp, walk);
    return orientation == 1 ? rep : rep.reversed();
}

/// A transversal of the ladders: a closed curve crossing every pole of the
/// torus exactly once, so it pairs to +-1 with the ladderpole slope. Walks
/// base rungs within each ladder until reaching a triangle based on the
/// opposite pole, crosses, and keeps the cycle of the eventual orbit.
inline NormalCurve ladder_transversal(const Analysis& a, int torus) {
    auto pole_of_tri = [&](int id) {
        int kp = a.ladders.pole_pos[static_cast<std::size_t>(id)];
        int side = a.cusp.side_class_of[static_cast<std::size_t>(id)][static_cast<std::size_t>(kp)];
        const CuspSide& s = a.cusp.sides[static_cast<std::size_t>(side)];
        return a.ladders.pole_of_vertex[static_cast<std::size_t>(
            a.cusp.vertex_at(s.tri0, CuspComplex::side_corner_pos(s.k0)[0]))];
    };
    struct State {
        int tri, entry, entered_pole;
        bool operator<(const State& o) const {
            if (tri != o.tri) return tri < o.tri;
            if (entry != o.entry) return entry < o.entry;
            return entered_pole < o.entered_pole;
        }
    };
    auto step = [&](const State& s) -> std::pair<CurveSegment, State> {
        int kp = a.ladders.pole_pos[static_cast<std::size_t>(s.tri)];
        int pole_here = pole_of_tri(s.tri);
        if (s.entry != kp && pole_here != s.entered_pole) {
            CurveSegment seg{s.tri, s.entry, kp};
            std::pair<int, int> nxt =
                a.cusp.side_mate[static_cast<std::size_t>(s.tri)][static_cast<std::size_t>(kp)];
            return {seg, State{nxt.first, nxt.second, pole_here}};
        }
        int exit = a.ladders.base_pos(s.tri);
        CurveSegment seg{s.tri, s.entry, exit};
        std::pair<int, int> nxt =
            a.cusp.side_mate[static_cast<std::size_t>(s.tri)][static_cast<std::size_t>(exit)];
        return {seg, State{nxt.first, nxt.second, s.entered_pole}};
    };
    int start = a.cusp.components[static_cast<std::size_t>(torus)].triangles.front();
    State cur{start, a.ladders.pole_pos[static_cast<std::size_t>(start)], pole_of_tri(start)};
    std::map<State, int> seen;
    std::vector<CurveSegment> path;
    while (!seen.count(cur)) {
        seen[cur] = static_cast<int>(path.size());
        auto [seg, nxt] = step(cur);
        path.push_back(seg);
        cur = nxt;
        check_internal(path.size() <= static_cast<std::size_t>(24 * a.cusp.n),
                       "ladder transversal failed to cycle");
    }
    std::vector<CurveSegment> cyc(path.begin() + seen[cur], path.end());
    NormalCurve curve = make_normal_curve(a.cusp, std::move(cyc));
    // Exactly one crossing per pole of this torus.
    std::map<int, int> crossings;
    for (const CurveSegment& s : curve.segs)
        if (s.exit == a.ladders.pole_pos[static_cast<std::size_t>(s.tri)]) ++crossings[pole_of_tri(s.tri)];
    int poles_here = 0;
    for (const PoleCurve& p : a.ladders.poles)
        if (p.component == torus) ++poles_here;
    check_internal(static_cast<int>(crossings.size()) == poles_here,
                   "transversal missed a pole");
    for (const auto& [pole, count] : crossings)
        check_internal(count == 1, "transversal crosses pole " + std::to_string(pole) + " twice");
    return curve;
}

}  // namespace detail

/// Per-cusp data of a holonomy construction.
struct CuspHolonomy {
    int torus = -1;
    int k = 0;                    // the torus carries 2k ladders
    NormalCurve delta;            // transversal class paired against
    Rational achieved;            // h(delta) or h(ell), coefficient of pi
    long long m = 0;              // pole crossings of the deformation curve (ladderpole case)
};

struct HolonomyResult {
    AngleVector theta;
    std::vector<CuspHolonomy> cusps;
};

/// Nonnegative structure with h(delta_i) = eps_i * k_i * pi/2: quarter-pi
/// deformations along the strip loops of every other ladder, the parity
/// chosen per cusp so the computed pairing matches the requested sign.
inline HolonomyResult rung_holonomy(const Analysis& a, const std::vector<int>& eps) {
    require(eps.size() == a.cusp.components.size(), "signs",
            "need one sign per cusp, got " + std::to_string(eps.size()));
    HolonomyResult out;
    out.theta = a.veering.taut.angles();
    std::vector<DeformationVector> dvs;
    std::vector<Rational> coeffs;
    for (const CuspTorus& torus : a.cusp.components) {
        require(eps[static_cast<std::size_t>(torus.id)] == 1 || eps[static_cast<std::size_t>(torus.id)] == -1,
                "signs", "signs must be +-1");
        CuspHolonomy ch;
        ch.torus = torus.id;
        const std::vector<int>& order = a.ladders.ladder_order[static_cast<std::size_t>(torus.id)];
        ch.k = static_cast<int>(order.size()) / 2;
        ch.delta = detail::ladder_transversal(a, torus.id);
        EdgeChain delta_chain = chain_of_curve(a.cusp, ch.delta);
        // Pick the ladder parity whose loops pair with delta by eps.
        int chosen = -1;
        for (int parity = 0; parity < 2 && chosen < 0; ++parity) {
            long long sign = 0;
            bool uniform = true;
            for (std::size_t i = static_cast<std::size_t>(parity); i < order.size(); i += 2) {
                NormalCurve loop = detail::ladder_loop(a, order[i]);
                long long s = intersection_chain_curve(a.cusp, chain_of_curve(a.cusp, loop), ch.delta);
                check_internal(s == 1 || s == -1, "ladder loop pairs with the transversal by +-1");
                if (sign == 0) sign = s;
                uniform = uniform && s == sign;
            }
            check_internal(uniform, "ladder loops of one parity pair inconsistently");
            if (sign == eps[static_cast<std::size_t>(torus.id)]) chosen = parity;
        }
        check_internal(chosen >= 0, "no ladder parity matches the requested sign");
        for (std::size_t i = static_cast<std::size_t>(chosen); i < order.size(); i += 2) {
            NormalCurve loop = detail::ladder_loop(a, order[i]);
            dvs.push_back(leading_trailing(a.tri, a.edges, a.cusp, loop));
            coeffs.push_back(Rational(1, 4));
        }
        out.cusps.push_back(std::move(ch));
    }
    std::vector<std::pair<Rational, const DeformationVector*>> terms;
    for (std::size_t i = 0; i < dvs.size(); ++i) terms.emplace_back(coeffs[i], &dvs[i]);
    out.theta = apply(a.tri, a.edges, out.theta, terms);
    check_internal(out.theta.min_entry() >= Rational(0), "rung holonomy left a negative angle");
    for (CuspHolonomy& ch : out.cusps) {
        ch.achieved = turning_angle(a.cusp, out.theta, ch.delta);
        check_internal(ch.achieved == Rational(eps[static_cast<std::size_t>(ch.torus)] * ch.k, 2),
                       "rung holonomy missed its target on cusp " + std::to_string(ch.torus));
    }
    return out;
}

/// Transverse-taut refinement: half-pi deformations along the loops of all
/// ladders of one orientation type, restricted to the cusps in J; each
/// tetrahedron is crossed at most twice, and h(delta_i) = eps * k_i * pi on J.
inline HolonomyResult rung_holonomy_transverse(const Analysis& a, const std::vector<int>& J,
                                               int eps) {
    require(a.veering.transverse.has_value(), "not-transverse-taut",
            "this construction needs a transverse-taut structure");
    require(eps == 1 || eps == -1, "signs", "eps must be +-1");
    std::set<int> in_J(J.begin(), J.end());
    for (int j : J)
        require(j >= 0 && j < static_cast<int>(a.cusp.components.size()), "signs",
                "cusp index " + std::to_string(j) + " out of range");
    HolonomyResult out;
    out.theta = a.veering.taut.angles();
    std::vector<DeformationVector> dvs;
    std::map<int, int> tet_crossings;
    for (const CuspTorus& torus : a.cusp.components) {
        CuspHolonomy ch;
        ch.torus = torus.id;
        const std::vector<int>& order = a.ladders.ladder_order[static_cast<std::size_t>(torus.id)];
        ch.k = static_cast<int>(order.size()) / 2;
        ch.delta = detail::ladder_transversal(a, torus.id);
        if (in_J.count(torus.id)) {
            // One orientation type, consistent across cusps; the type whose
            // loops pair with delta by eps.
            int chosen_type = -1;
            for (int asc = 0; asc < 2 && chosen_type < 0; ++asc) {
                long long sign = 0;
                bool uniform = true;
                for (int lid : order) {
                    if (a.ladders.ladders[static_cast<std::size_t>(lid)].ascending != (asc == 1)) continue;
                    NormalCurve loop = detail::ladder_loop(a, lid);
                    long long s =
                        intersection_chain_curve(a.cusp, chain_of_curve(a.cusp, loop), ch.delta);
                    if (sign == 0) sign = s;
                    uniform = uniform && s == sign;
                }
                check_internal(uniform, "same-type ladder loops pair inconsistently");
                if (sign == eps) chosen_type = asc;
            }
            check_internal(chosen_type >= 0, "no ladder type matches the requested sign");
            for (int lid : order) {
                if (a.ladders.ladders[static_cast<std::size_t>(lid)].ascending != (chosen_type == 1))
                    continue;
                NormalCurve loop = detail::ladder_loop(a, lid);
                for (const CurveSegment& s : loop.segs) ++tet_crossings[a.cusp.tet_of(s.tri)];
                dvs.push_back(leading_trailing(a.tri, a.edges, a.cusp, loop));
            }
        }
        out.cusps.push_back(std::move(ch));
    }
    for (const auto& [tet, count] : tet_crossings)
        check_internal(count <= 2, "a tetrahedron suffers more than two deformations");
    std::vector<std::pair<Rational, const DeformationVector*>> terms;
    for (const DeformationVector& dv : dvs) terms.emplace_back(Rational(1, 2), &dv);
    out.theta = apply(a.tri, a.edges, out.theta, terms);
    check_internal(out.theta.min_entry() >= Rational(0),
                   "transverse rung holonomy left a negative angle");
    for (CuspHolonomy& ch : out.cusps) {
        ch.achieved = turning_angle(a.cusp, out.theta, ch.delta);
        Rational want = in_J.count(ch.torus) ? Rational(eps * ch.k) : Rational(0);
        check_internal(ch.achieved == want,
                       "transverse rung holonomy missed its target on cusp " + std::to_string(ch.torus));
    }
    return out;
}

struct ExoticResult {
    TautStructure taut;
    AngleVector theta;
};

/// The two exotic taut structures of a transverse-taut veering structure:
/// full-strength rung deformations over all cusps flatten every tetrahedron
/// again, onto a pi-pair different from the input's.
inline std::array<ExoticResult, 2> exotic_taut(const Analysis& a) {
    require(a.veering.transverse.has_value(), "not-transverse-taut",
            "exotic taut structures need a transverse-taut structure");
    std::vector<int> all_cusps;
    for (const CuspTorus& torus : a.cusp.components) all_cusps.push_back(torus.id);
    std::array<ExoticResult, 2> out;
    for (int which = 0; which < 2; ++which) {
        HolonomyResult res = rung_holonomy_transverse(a, all_cusps, which == 0 ? 1 : -1);
        ExoticResult& ex = out[static_cast<std::size_t>(which)];
        ex.theta = res.theta;
        ex.taut.pi_pair.assign(static_cast<std::size_t>(a.tri.n), -1);
        for (int t = 0; t < a.tri.n; ++t) {
            for (int p = 0; p < 3; ++p) {
                const Rational& x = ex.theta.at(t, p);
                check_internal(x == Rational(0) || x == Rational(1),
                               "exotic deformation did not flatten tet " + std::to_string(t));
                if (x == Rational(1)) {
                    check_internal(ex.taut.pi_pair[static_cast<std::size_t>(t)] == -1,
                                   "two wide pairs in an exotic tetrahedron");
                    ex.taut.pi_pair[static_cast<std::size_t>(t)] = p;
                }
            }
            check_internal(ex.taut.pi_pair[static_cast<std::size_t>(t)] >= 0,
                           "exotic tetrahedron with no wide pair");
        }
        check_internal(check_angle_vector(a.tri, a.edges, ex.taut.angles()).cls == AngleClass::taut,
                       "exotic assignment is not taut");
        check_internal(ex.taut.pi_pair != a.veering.taut.pi_pair,
                       "exotic structure equals the input");
    }
    return out;
}

/// The horizontal curve of one cusp: travel wide-ward within a ladder and
/// cross the pole whenever a hinge is entered through its base; the cycle of
/// this walk (initial dead arc dropped) closes up crossing every pole the
/// same way.
inline NormalCurve horizontal_curve(const Analysis& a, int torus, int start_tri) {
    struct State {
        int tri, entry;
        bool operator<(const State& o) const {
            return tri != o.tri ? tri < o.tri : entry < o.entry;
        }
    };
    auto next = [&](const State& s) -> State {
        bool hinge = a.veering.hinge[static_cast<std::size_t>(a.cusp.tet_of(s.tri))];
        int exit;
        if (hinge && s.entry == a.ladders.base_pos(s.tri))
            exit = a.ladders.pole_pos[static_cast<std::size_t>(s.tri)];
        else
            exit = a.ladders.rung_pos[static_cast<std::size_t>(s.tri)];
        std::pair<int, int> nxt = a.cusp.side_mate[static_cast<std::size_t>(s.tri)][static_cast<std::size_t>(exit)];
        return State{nxt.first, nxt.second};
    };
    std::map<State, int> seen;
    std::vector<State> path;
    State cur{start_tri, a.ladders.base_pos(start_tri)};
    while (!seen.count(cur)) {
        seen[cur] = static_cast<int>(path.size());
        path.push_back(cur);
        cur = next(cur);
        check_internal(path.size() <= static_cast<std::size_t>(8 * a.cusp.n),
                       "horizontal walk failed to cycle");
    }
    int from = seen[cur];
    std::vector<CurveSegment> segs;
    for (std::size_t i = static_cast<std::size_t>(from); i < path.size(); ++i) {
        const State& s = path[i];
        bool hinge = a.veering.hinge[static_cast<std::size_t>(a.cusp.tet_of(s.tri))];
        int exit = (hinge && s.entry == a.ladders.base_pos(s.tri))
                       ? a.ladders.pole_pos[static_cast<std::size_t>(s.tri)]
                       : a.ladders.rung_pos[static_cast<std::size_t>(s.tri)];
        segs.push_back(CurveSegment{s.tri, s.entry, exit});
    }
    NormalCurve curve = make_normal_curve(a.cusp, std::move(segs));
    check_internal(a.cusp.component_of_tri[static_cast<std::size_t>(start_tri)] == torus,
                   "horizontal start off its torus");
    return curve;
}

struct LadderpoleResult {
    AngleVector theta;
    std::vector<CuspHolonomy> cusps;  // achieved = h([ell_i]); m = pole crossings
    std::vector<NormalCurve> ells;    // oriented ladderpole representatives
};

namespace detail {

/// Deterministic horizontal curve of a torus: start from its least hinge.
inline NormalCurve canonical_horizontal(const Analysis& a, int torus) {
    for (int id : a.cusp.components[static_cast<std::size_t>(torus)].triangles)
        if (a.veering.hinge[static_cast<std::size_t>(a.cusp.tet_of(id))])
            return horizontal_curve(a, torus, id);
    check_internal(false, "torus without hinge triangles");
    return {};
}

}  // namespace detail

/// Eighth-pi deformations along one horizontal curve per cusp, on top of the
/// boundary hinge rescue: every angle that decreases starts at pi/2 or more,
/// and h([ell_i]) comes out to a quarter-pi times the pole crossing count.
inline LadderpoleResult ladderpole_holonomy(const Analysis& a, const std::vector<int>& orientations) {
    require(orientations.size() == a.cusp.components.size(), "signs",
            "need one orientation per cusp");
    LadderpoleResult out;
    out.theta = hinge_rescue(a, Rational(1, 4));
    std::vector<DeformationVector> dvs;
    std::map<int, int> tri_crossings;
    std::vector<NormalCurve> gammas;
    for (const CuspTorus& torus : a.cusp.components) {
        require(orientations[static_cast<std::size_t>(torus.id)] == 1 ||
                    orientations[static_cast<std::size_t>(torus.id)] == -1,
                "signs", "orientations must be +-1");
        NormalCurve gamma = detail::canonical_horizontal(a, torus.id);
        for (const CurveSegment& s : gamma.segs) ++tri_crossings[s.tri];
        // Decreased slots started at pi/2 or more.
        DeformationVector d = leading_trailing(a.tri, a.edges, a.cusp, gamma);
        for (int s = 0; s < 3 * a.tri.n; ++s)
            if (d.d[static_cast<std::size_t>(s)] < 0)
                check_internal(out.theta.a[static_cast<std::size_t>(s)] >= Rational(1, 2),
                               "horizontal curve decreases a small angle");
        dvs.push_back(std::move(d));
        gammas.push_back(std::move(gamma));
    }
    for (const auto& [tri_id, count] : tri_crossings)
        check_internal(count <= 1, "a cusp triangle is crossed twice by the horizontal curves");
    std::vector<std::pair<Rational, const DeformationVector*>> terms;
    for (const DeformationVector& dv : dvs) terms.emplace_back(Rational(1, 8), &dv);
    out.theta = apply(a.tri, a.edges, out.theta, terms);
    check_internal(out.theta.min_entry() >= Rational(0), "ladderpole holonomy left a negative angle");
    for (const CuspTorus& torus : a.cusp.components) {
        int least_pole = -1;
        for (const PoleCurve& p : a.ladders.poles)
            if (p.component == torus.id && (least_pole == -1 || p.id < least_pole)) least_pole = p.id;
        NormalCurve ell =
            detail::pole_rep(a, least_pole, orientations[static_cast<std::size_t>(torus.id)]);
        CuspHolonomy ch;
        ch.torus = torus.id;
        ch.k = static_cast<int>(a.ladders.ladder_order[static_cast<std::size_t>(torus.id)].size()) / 2;
        ch.delta = gammas[static_cast<std::size_t>(out.cusps.size())];
        long long iota = intersection_chain_curve(
            a.cusp, chain_of_curve(a.cusp, ch.delta), ell);
        ch.m = iota < 0 ? -iota : iota;
        check_internal(ch.m >= 1, "horizontal curve misses the ladderpole class");
        ch.achieved = turning_angle(a.cusp, out.theta, ell);
        check_internal(ch.achieved == Rational(iota, 4) || ch.achieved == Rational(-iota, 4),
                       "ladderpole holonomy does not match the crossing count");
        out.cusps.push_back(std::move(ch));
        out.ells.push_back(std::move(ell));
    }
    return out;
}

/// Transverse-taut variant: quarter-pi coefficients on the cusps in J, the
/// ell_i oriented consistently with (or consistently against) the transverse
/// structure; h([ell_i]) = m_i/2 times pi on J and 0 elsewhere.
inline LadderpoleResult ladderpole_holonomy_transverse(const Analysis& a, const std::vector<int>& J,
                                                       const std::vector<int>& orientations) {
    require(a.veering.transverse.has_value(), "not-transverse-taut",
            "this construction needs a transverse-taut structure");
    require(orientations.size() == a.cusp.components.size(), "signs",
            "need one orientation per cusp");
    // Orientation of each chosen pole rep relative to the transverse "up":
    // all cusps must agree or all disagree.
    std::vector<int> rel(a.cusp.components.size(), 0);
    for (const CuspTorus& torus : a.cusp.components) {
        int least_pole = -1;
        for (const PoleCurve& p : a.ladders.poles)
            if (p.component == torus.id && (least_pole == -1 || p.id < least_pole)) least_pole = p.id;
        const PoleCurve& p = a.ladders.poles[static_cast<std::size_t>(least_pole)];
        // sigma-up along the pole: from the thin pole-mate corner toward the
        // wide corner of an ascending triangle whose pole side lies on it.
        int up_dir = 0;
        for (int id = 0; id < 4 * a.cusp.n && up_dir == 0; ++id) {
            if (a.ladders.ladder_of_tri[static_cast<std::size_t>(id)] < 0) continue;
            const Ladder& ld =
                a.ladders.ladders[static_cast<std::size_t>(a.ladders.ladder_of_tri[static_cast<std::size_t>(id)])];
            if (!ld.ascending) continue;
            int kp = a.ladders.pole_pos[static_cast<std::size_t>(id)];
            int side = a.cusp.side_class_of[static_cast<std::size_t>(id)][static_cast<std::size_t>(kp)];
            for (std::size_t i = 0; i < p.sides.size(); ++i) {
                if (p.sides[i] != side) continue;
                // Within triangle id, the side runs thin-mate -> wide in the
                // up direction; compare with the stored traversal direction.
                int wide_corner = a.ladders.wide_pos[static_cast<std::size_t>(id)];
                int thin_corner = 3 - kp - wide_corner;
                int end_thin = detail::side_end_of_corner(a.cusp, id, kp, thin_corner);
                // dir +1 means the pole walk runs tail(end 0) -> head(end 1).
                int walk_dir = p.dir[i];
                up_dir = (end_thin == 0 ? +1 : -1) * walk_dir > 0 ? +1 : -1;
                break;
            }
        }
        check_internal(up_dir != 0, "could not orient a pole against the transverse structure");
        rel[static_cast<std::size_t>(torus.id)] =
            orientations[static_cast<std::size_t>(torus.id)] * up_dir;
    }
    for (std::size_t i = 1; i < rel.size(); ++i)
        require(rel[i] == rel[0], "inconsistent-orientations",
                "ladderpole orientations must all agree or all disagree with the transverse structure");

    std::set<int> in_J(J.begin(), J.end());
    LadderpoleResult out;
    out.theta = hinge_rescue(a, Rational(1, 4));
    std::vector<DeformationVector> dvs;
    std::map<int, int> tri_crossings;
    std::vector<NormalCurve> gammas(a.cusp.components.size());
    for (const CuspTorus& torus : a.cusp.components) {
        NormalCurve gamma = detail::canonical_horizontal(a, torus.id);
        gammas[static_cast<std::size_t>(torus.id)] = gamma;
        if (!in_J.count(torus.id)) continue;
        for (const CurveSegment& s : gamma.segs) ++tri_crossings[s.tri];
        dvs.push_back(leading_trailing(a.tri, a.edges, a.cusp, gamma));
    }
    for (const auto& [tri_id, count] : tri_crossings)
        check_internal(count <= 1, "a cusp triangle is crossed twice by the horizontal curves");
    std::vector<std::pair<Rational, const DeformationVector*>> terms;
    for (const DeformationVector& dv : dvs) terms.emplace_back(Rational(1, 4), &dv);
    out.theta = apply(a.tri, a.edges, out.theta, terms);
    check_internal(out.theta.min_entry() >= Rational(0),
                   "transverse ladderpole holonomy left a negative angle");
    for (const CuspTorus& torus : a.cusp.components) {
        int least_pole = -1;
        for (const PoleCurve& p : a.ladders.poles)
            if (p.component == torus.id && (least_pole == -1 || p.id < least_pole)) least_pole = p.id;
        NormalCurve ell =
            detail::pole_rep(a, least_pole, orientations[static_cast<std::size_t>(torus.id)]);
        CuspHolonomy ch;
        ch.torus = torus.id;
        ch.k = static_cast<int>(a.ladders.ladder_order[static_cast<std::size_t>(torus.id)].size()) / 2;
        ch.delta = gammas[static_cast<std::size_t>(torus.id)];
        long long iota =
            intersection_chain_curve(a.cusp, chain_of_curve(a.cusp, ch.delta), ell);
        ch.m = iota < 0 ? -iota : iota;
        ch.achieved = turning_angle(a.cusp, out.theta, ell);
        if (in_J.count(torus.id))
            check_internal(ch.achieved == Rational(iota, 2) || ch.achieved == Rational(-iota, 2),
                           "transverse ladderpole holonomy does not match the crossing count");
        else
            check_internal(ch.achieved == Rational(0), "holonomy leaked onto a cusp outside J");
        out.cusps.push_back(std::move(ch));
        out.ells.push_back(std::move(ell));
    }
    return out;
}

}  // namespace veering
