#include <doctest.h>

#include <map>

#include "fixtures.hpp"
#include "veering/bundles.hpp"
#include "veering/holonomy.hpp"

using namespace veering;

namespace {

std::uint64_t rng_state = 0x9e3779b97f4a7c15ull;
std::uint64_t rnd() { return veering::detail::splitmix64(rng_state); }

/// Random closed normal curve: a random transverse walk until a state repeats.
NormalCurve random_curve(const CuspComplex& cusp, int start_tri) {
    struct State {
        int tri, entry;
        bool operator<(const State& o) const {
            return tri != o.tri ? tri < o.tri : entry < o.entry;
        }
    };
    std::map<State, int> seen;
    std::vector<CurveSegment> path;
    State cur{start_tri, static_cast<int>(rnd() % 3)};
    while (!seen.count(cur)) {
        seen[cur] = static_cast<int>(path.size());
        int exit = (cur.entry + 1 + static_cast<int>(rnd() % 2)) % 3;
        path.push_back(CurveSegment{cur.tri, cur.entry, exit});
        std::pair<int, int> nxt =
            cusp.side_mate[static_cast<std::size_t>(cur.tri)][static_cast<std::size_t>(exit)];
        cur = State{nxt.first, nxt.second};
    }
    std::vector<CurveSegment> cyc(path.begin() + seen[cur], path.end());
    return make_normal_curve(cusp, std::move(cyc));
}

/// Random generalized angle structure: taut plus rational edge-loop terms.
AngleVector random_generalized(const Analysis& a) {
    AngleVector theta = a.veering.taut.angles();
    for (const EdgeClass& e : a.edges.classes) {
        if (rnd() % 2) continue;
        Rational coeff(static_cast<std::int64_t>(rnd() % 7) - 3, static_cast<std::int64_t>(rnd() % 5) + 1);
        DeformationVector d = edge_loop_deformation(a.tri, a.edges, a.cusp, e.id);
        theta = apply(a.tri, a.edges, theta, coeff, d);
    }
    return theta;
}

}  // namespace

TEST_CASE("taut holonomy vanishes on basis classes and ladderpoles") {
    for (const MonodromyWord& w : corpus(6, 51)) {
        Bundle bd = bundle(w);
        Analysis a = analyze(bd.tri, bd.taut);
        AngleVector taut = bd.taut.angles();
        for (const auto& [h1, h2] : holonomy_functional(a, taut)) {
            CHECK(h1 == Rational(0));
            CHECK(h2 == Rational(0));
        }
        for (const PoleCurve& p : a.ladders.poles) {
            NormalCurve rep = detail::pole_rep(a, p.id);
            CHECK(turning_angle(a.cusp, taut, rep) == Rational(0));
        }
    }
}

TEST_CASE("vertex loops turn by exactly one full angle") {
    Bundle bd = bundle("RLRLL");
    Analysis a = analyze(bd.tri, bd.taut);
    for (int rep = 0; rep < 6; ++rep) {
        AngleVector theta = random_generalized(a);
        for (const CuspVertex& vx : a.cusp.vertices) {
            Rational cw = turning_angle(a.cusp, theta, vertex_loop(a.cusp, vx.id, true));
            Rational ccw = turning_angle(a.cusp, theta, vertex_loop(a.cusp, vx.id, false));
            CHECK((cw == Rational(2) || cw == Rational(-2)));
            CHECK(ccw == -cw);
        }
    }
}

TEST_CASE("deformation formula: holonomy shifts by twice the intersection number") {
    for (const char* word : {"RL", "RRLL", "RLRRL"}) {
        Bundle bd = bundle(word);
        Analysis a = analyze(bd.tri, bd.taut);
        int start = 0;
        for (int trial = 0; trial < 40; ++trial) {
            AngleVector theta = random_generalized(a);
            NormalCurve gamma = random_curve(a.cusp, start % (4 * a.tri.n));
            NormalCurve delta = random_curve(a.cusp, (start + 5) % (4 * a.tri.n));
            start += 7;
            Rational t(static_cast<std::int64_t>(rnd() % 9) - 4, static_cast<std::int64_t>(rnd() % 6) + 1);
            DeformationVector d = leading_trailing(a.tri, a.edges, a.cusp, gamma);
            AngleVector moved = apply(a.tri, a.edges, theta, t, d);
            long long iota = intersection_chain_curve(a.cusp, chain_of_curve(a.cusp, gamma), delta);
            Rational lhs = turning_angle(a.cusp, moved, delta);
            Rational rhs = turning_angle(a.cusp, theta, delta) + Rational(2) * t * Rational(iota);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("representation property: homologous embedded curves share their turning angle") {
    Bundle bd = bundle("RRLL");
    Analysis a = analyze(bd.tri, bd.taut);
    // Random spanning trees give plenty of embedded fundamental cycles.
    std::map<std::pair<long long, long long>, std::vector<NormalCurve>> buckets;
    const CuspTorus& torus = a.cusp.components[0];
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<int> order = torus.sides;
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[rnd() % i]);
        std::vector<int> comp(a.cusp.vertices.size());
        for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = static_cast<int>(i);
        auto find = [&](int v) {
            while (comp[static_cast<std::size_t>(v)] != v) v = comp[static_cast<std::size_t>(v)];
            return v;
        };
        std::vector<int> tree;
        std::vector<int> loose;
        for (int sid : order) {
            auto [u, w] = detail::side_endpoints(a.cusp, sid);
            int ru = find(u), rw = find(w);
            if (ru != rw) {
                comp[static_cast<std::size_t>(ru)] = rw;
                tree.push_back(sid);
            } else {
                loose.push_back(sid);
            }
        }
        std::vector<int> parent_side(a.cusp.vertices.size(), -1), parent_dir(a.cusp.vertices.size(), 0),
            parent_vertex(a.cusp.vertices.size(), -1);
        std::vector<std::vector<std::pair<int, int>>> adj(a.cusp.vertices.size());
        for (int sid : tree) {
            auto [u, w] = detail::side_endpoints(a.cusp, sid);
            adj[static_cast<std::size_t>(u)].push_back({sid, +1});
            adj[static_cast<std::size_t>(w)].push_back({sid, -1});
        }
        int root = torus.verts[0];
        std::vector<int> stack{root};
        std::vector<bool> seen(a.cusp.vertices.size(), false);
        seen[static_cast<std::size_t>(root)] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [sid, dir] : adj[static_cast<std::size_t>(v)]) {
                auto [u, w] = detail::side_endpoints(a.cusp, sid);
                int other = dir == 1 ? w : u;
                if (seen[static_cast<std::size_t>(other)]) continue;
                seen[static_cast<std::size_t>(other)] = true;
                parent_vertex[static_cast<std::size_t>(other)] = v;
                parent_side[static_cast<std::size_t>(other)] = sid;
                parent_dir[static_cast<std::size_t>(other)] = dir;
                stack.push_back(other);
            }
        }
        auto to_root = [&](int v) {
            std::vector<WalkStep> up;
            while (parent_vertex[static_cast<std::size_t>(v)] != -1) {
                up.push_back(WalkStep{parent_side[static_cast<std::size_t>(v)],
                                      -parent_dir[static_cast<std::size_t>(v)]});
                v = parent_vertex[static_cast<std::size_t>(v)];
            }
            return up;
        };
        for (int sid : loose) {
            auto [u, w] = detail::side_endpoints(a.cusp, sid);
            CycleWalk walk;
            walk.steps.push_back(WalkStep{sid, +1});
            std::vector<WalkStep> w_up = to_root(w), u_up = to_root(u);
            while (!w_up.empty() && !u_up.empty() && w_up.back().side == u_up.back().side) {
                w_up.pop_back();
                u_up.pop_back();
            }
            for (const WalkStep& st : w_up) walk.steps.push_back(st);
            for (auto it = u_up.rbegin(); it != u_up.rend(); ++it)
                walk.steps.push_back(WalkStep{it->side, -it->dir});
            NormalCurve curve = push_off(a.cusp, walk);
            if (!curve.embedded) continue;
            std::pair<long long, long long> cls = a.basis.curve_class(a.cusp, curve);
            if (cls == std::make_pair(0ll, 0ll)) continue;
            buckets[cls].push_back(curve);
        }
    }
    int pairs = 0;
    for (int rep = 0; rep < 4; ++rep) {
        AngleVector theta = random_generalized(a);
        for (const auto& [cls, curves] : buckets) {
            for (std::size_t i = 0; i + 1 < curves.size() && i < 6; ++i) {
                CHECK(turning_angle(a.cusp, theta, curves[i]) ==
                      turning_angle(a.cusp, theta, curves[i + 1]));
                ++pairs;
            }
        }
    }
    CHECK(pairs >= 50);
}

TEST_CASE("rung holonomy meets eps * k * pi/2 and stays nonnegative") {
    for (const char* word : {"RL", "RRLL", "RLRRL"}) {
        Bundle bd = bundle(word);
        Analysis a = analyze(bd.tri, bd.taut);
        for (int eps : {1, -1}) {
            std::vector<int> signs(a.cusp.components.size(), eps);
            HolonomyResult res = rung_holonomy(a, signs);
            CHECK(res.theta.min_entry() >= Rational(0));
            CHECK(check_angle_vector(a.tri, a.edges, res.theta).cls != AngleClass::invalid);
            for (const CuspHolonomy& ch : res.cusps) {
                CHECK(ch.achieved == Rational(eps * ch.k, 2));
                CHECK(ch.k >= 1);
            }
            // The midpoint with the taut structure halves the holonomy and
            // stays nonnegative.
            AngleVector mid = res.theta;
            AngleVector taut = bd.taut.angles();
            for (std::size_t i = 0; i < mid.a.size(); ++i)
                mid.a[i] = (mid.a[i] + taut.a[i]) / Rational(2);
            CHECK(mid.min_entry() >= Rational(0));
            for (const CuspHolonomy& ch : res.cusps)
                CHECK(turning_angle(a.cusp, mid, ch.delta) == ch.achieved / Rational(2));
        }
    }
}

TEST_CASE("figure-eight rung holonomy: k = 2, so h(delta) = +-pi") {
    Bundle bd = bundle("RL");
    Analysis a = analyze(bd.tri, bd.taut);
    HolonomyResult plus = rung_holonomy(a, {1});
    CHECK(plus.cusps[0].k == 2);
    CHECK(plus.cusps[0].achieved == Rational(1));
    HolonomyResult minus = rung_holonomy(a, {-1});
    CHECK(minus.cusps[0].achieved == Rational(-1));
}

TEST_CASE("transverse rung holonomy: J selects cusps, each tetrahedron hit at most twice") {
    Bundle bd = bundle("RRLL");
    Analysis a = analyze(bd.tri, bd.taut);
    SUBCASE("empty J returns the taut structure") {
        HolonomyResult res = rung_holonomy_transverse(a, {}, 1);
        CHECK(res.theta.a == bd.taut.angles().a);
        for (const CuspHolonomy& ch : res.cusps) CHECK(ch.achieved == Rational(0));
    }
    SUBCASE("full J meets eps * k * pi") {
        for (int eps : {1, -1}) {
            HolonomyResult res = rung_holonomy_transverse(a, {0}, eps);
            CHECK(res.theta.min_entry() >= Rational(0));
            CHECK(res.cusps[0].achieved == Rational(eps * res.cusps[0].k));
        }
    }
}

TEST_CASE("exotic taut structures: flat, valid, distinct from the input and each other") {
    for (const char* word : {"RL", "RRLL", "RLRRL", "RRLRLL"}) {
        Bundle bd = bundle(word);
        Analysis a = analyze(bd.tri, bd.taut);
        std::array<ExoticResult, 2> ex = exotic_taut(a);
        for (const ExoticResult& e : ex) {
            CHECK(check_angle_vector(a.tri, a.edges, e.taut.angles()).cls == AngleClass::taut);
            CHECK(e.taut.pi_pair != a.veering.taut.pi_pair);
        }
        // Observed across the corpus: the two signs give different structures.
        CHECK(ex[0].taut.pi_pair != ex[1].taut.pi_pair);
    }
}

TEST_CASE("figure-eight exotic structures are the other two taut assignments") {
    Bundle bd = bundle("RL");
    Analysis a = analyze(bd.tri, bd.taut);
    std::array<ExoticResult, 2> ex = exotic_taut(a);
    std::vector<std::vector<int>> got{ex[0].taut.pi_pair, ex[1].taut.pi_pair};
    std::sort(got.begin(), got.end());
    CHECK(got[0] == std::vector<int>{0, 2});
    CHECK(got[1] == std::vector<int>{2, 0});
}

TEST_CASE("ladderpole holonomy: nonnegative, quarter-pi per crossing") {
    for (const char* word : {"RL", "RRLL", "RLRRL", "RRRLLL"}) {
        Bundle bd = bundle(word);
        Analysis a = analyze(bd.tri, bd.taut);
        std::vector<int> orient(a.cusp.components.size(), 1);
        LadderpoleResult res = ladderpole_holonomy(a, orient);
        CHECK(res.theta.min_entry() >= Rational(0));
        CHECK(check_angle_vector(a.tri, a.edges, res.theta).cls != AngleClass::invalid);
        for (const CuspHolonomy& ch : res.cusps) {
            CHECK(ch.m >= 1);
            Rational absval = ch.achieved < Rational(0) ? -ch.achieved : ch.achieved;
            CHECK(absval == Rational(ch.m, 4));
        }
    }
}

TEST_CASE("transverse ladderpole holonomy: J selects cusps at half-pi per crossing") {
    Bundle bd = bundle("RRLL");
    Analysis a = analyze(bd.tri, bd.taut);
    SUBCASE("empty J keeps the boundary rescue values") {
        LadderpoleResult res = ladderpole_holonomy_transverse(a, {}, {1});
        for (const CuspHolonomy& ch : res.cusps) CHECK(ch.achieved == Rational(0));
    }
    SUBCASE("full J") {
        LadderpoleResult res = ladderpole_holonomy_transverse(a, {0}, {1});
        CHECK(res.theta.min_entry() >= Rational(0));
        for (const CuspHolonomy& ch : res.cusps) {
            CHECK(ch.m >= 1);
            Rational absval = ch.achieved < Rational(0) ? -ch.achieved : ch.achieved;
            CHECK(absval == Rational(ch.m, 2));
        }
    }
    SUBCASE("reversed orientation is also consistent") {
        LadderpoleResult res = ladderpole_holonomy_transverse(a, {0}, {-1});
        CHECK(res.theta.min_entry() >= Rational(0));
    }
}

TEST_CASE("deformation along a null-homologous curve leaves holonomy unchanged") {
    Bundle bd = bundle("RRLL");
    Analysis a = analyze(bd.tri, bd.taut);
    AngleVector theta = random_generalized(a);
    std::vector<std::pair<Rational, Rational>> before = holonomy_functional(a, theta);
    for (const CuspVertex& vx : a.cusp.vertices) {
        DeformationVector d =
            leading_trailing(a.tri, a.edges, a.cusp, vertex_loop(a.cusp, vx.id, true));
        theta = apply(a.tri, a.edges, theta, Rational(3, 7), d);
    }
    std::vector<std::pair<Rational, Rational>> after = holonomy_functional(a, theta);
    CHECK(before == after);
}

TEST_CASE("self-pairing of random curves vanishes") {
    Bundle bd = bundle("RLRLL");
    Analysis a = analyze(bd.tri, bd.taut);
    for (int trial = 0; trial < 12; ++trial) {
        NormalCurve c = random_curve(a.cusp, static_cast<int>(rnd() % (4u * static_cast<unsigned>(a.tri.n))));
        CHECK(intersection_chain_curve(a.cusp, chain_of_curve(a.cusp, c), c) == 0);
    }
}

TEST_CASE("horizontal curve slopes per starting hinge are reported, not asserted equal") {
    Bundle bd = bundle("RRLL");
    Analysis a = analyze(bd.tri, bd.taut);
    std::vector<std::pair<long long, long long>> classes;
    for (int id = 0; id < 4 * a.tri.n; ++id) {
        if (!a.veering.hinge[static_cast<std::size_t>(a.cusp.tet_of(id))]) continue;
        NormalCurve gamma = horizontal_curve(a, a.cusp.component_of_tri[static_cast<std::size_t>(id)], id);
        classes.push_back(a.basis.curve_class(a.cusp, gamma));
    }
    REQUIRE(!classes.empty());
    for (const auto& cls : classes) CHECK(cls != std::make_pair(0ll, 0ll));
}
