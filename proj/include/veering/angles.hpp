#pragma once

#include <string>
#include <vector>

#include "veering/rational.hpp"
#include "veering/triangulation.hpp"

namespace veering {

/// 3n angle slots, entry (t,p) being the coefficient of pi on opposite-edge
/// pair p of tetrahedron t.
struct AngleVector {
    std::vector<Rational> a;

    static AngleVector zero(int n) {
        AngleVector v;
        v.a.assign(static_cast<std::size_t>(3 * n), Rational(0));
        return v;
    }
    Rational& at(int tet, int p) { return a[static_cast<std::size_t>(3 * tet + p)]; }
    const Rational& at(int tet, int p) const { return a[static_cast<std::size_t>(3 * tet + p)]; }
    int n() const { return static_cast<int>(a.size()) / 3; }

    Rational min_entry() const {
        Rational m = a.at(0);
        for (const Rational& x : a) m = veering::min(m, x);
        return m;
    }
};

/// Flat angle assignment: pair pi_pair[t] carries pi, the other two carry 0.
struct TautStructure {
    std::vector<int> pi_pair;

    AngleVector angles() const {
        AngleVector v = AngleVector::zero(static_cast<int>(pi_pair.size()));
        for (int t = 0; t < static_cast<int>(pi_pair.size()); ++t)
            v.at(t, pi_pair[static_cast<std::size_t>(t)]) = Rational(1);
        return v;
    }
};

enum class AngleClass { invalid, generalized, taut, positive };

inline std::string to_string(AngleClass c) {
    switch (c) {
        case AngleClass::invalid: return "invalid";
        case AngleClass::generalized: return "generalized";
        case AngleClass::taut: return "taut";
        case AngleClass::positive: return "positive";
    }
    return "?";
}

struct AngleViolation {
    enum class Kind { tet_sum, edge_sum } kind;
    int index;       // tetrahedron or edge class
    Rational value;  // the offending sum, as a coefficient of pi
};

struct AngleCheck {
    AngleClass cls = AngleClass::invalid;
    std::vector<AngleViolation> violations;
};

/// Classification of an angle vector: the tetrahedron equations (slots sum to
/// pi) and edge equations (dihedral angles around each edge class sum to 2*pi)
/// decide generalized; value constraints refine to taut or positive.
inline AngleCheck check_angle_vector(const Triangulation& tri, const EdgeTable& edges,
                                     const AngleVector& theta) {
    require(static_cast<int>(theta.a.size()) == 3 * tri.n, "dimension",
            "angle vector has " + std::to_string(theta.a.size()) + " entries, expected " +
                std::to_string(3 * tri.n));
    AngleCheck out;
    for (int t = 0; t < tri.n; ++t) {
        Rational s = theta.at(t, 0) + theta.at(t, 1) + theta.at(t, 2);
        if (s != Rational(1))
            out.violations.push_back({AngleViolation::Kind::tet_sum, t, s});
    }
    for (const EdgeClass& e : edges.classes) {
        Rational s(0);
        for (const EdgeIncidence& inc : e.around) s += theta.at(inc.tet, pair_of_edge(inc.a, inc.b));
        if (s != Rational(2))
            out.violations.push_back({AngleViolation::Kind::edge_sum, e.id, s});
    }
    if (!out.violations.empty()) {
        out.cls = AngleClass::invalid;
        return out;
    }
    bool positive = true, flat = true;
    for (const Rational& x : theta.a) {
        if (!(x > Rational(0))) positive = false;
        if (!(x == Rational(0) || x == Rational(1))) flat = false;
    }
    out.cls = positive ? AngleClass::positive : (flat ? AngleClass::taut : AngleClass::generalized);
    return out;
}

/// Exhaustive search for taut structures, ordered lexicographically in
/// pi_pair. Prunes on partial edge sums; fine for the intended desk scale.
inline std::vector<TautStructure> enumerate_taut_structures(const Triangulation& tri,
                                                            const EdgeTable& edges) {
    int n = tri.n;
    int m = static_cast<int>(edges.classes.size());
    // Per edge class: contribution of (tet, pair) choices, and how many
    // incidences each tetrahedron has on it per pair.
    // pi_count[e] tracks pi-contributions so far (each counts 1); an edge
    // needs total exactly 2.
    std::vector<std::vector<std::array<int, 3>>> weight(
        static_cast<std::size_t>(m), std::vector<std::array<int, 3>>(static_cast<std::size_t>(n), {0, 0, 0}));
    for (const EdgeClass& e : edges.classes)
        for (const EdgeIncidence& inc : e.around)
            weight[static_cast<std::size_t>(e.id)][static_cast<std::size_t>(inc.tet)]
                  [static_cast<std::size_t>(pair_of_edge(inc.a, inc.b))] += 1;
    // remaining_max[e][t] = max over assignments of tets t..n-1 of their contribution to e.
    std::vector<std::vector<int>> remaining_max(static_cast<std::size_t>(m),
                                                std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
    for (int e = 0; e < m; ++e)
        for (int t = n - 1; t >= 0; --t) {
            const std::array<int, 3>& w = weight[static_cast<std::size_t>(e)][static_cast<std::size_t>(t)];
            remaining_max[static_cast<std::size_t>(e)][static_cast<std::size_t>(t)] =
                remaining_max[static_cast<std::size_t>(e)][static_cast<std::size_t>(t) + 1] +
                std::max({w[0], w[1], w[2]});
        }

    std::vector<TautStructure> found;
    std::vector<int> choice(static_cast<std::size_t>(n), -1);
    std::vector<int> sum(static_cast<std::size_t>(m), 0);

    auto feasible = [&](int next_tet) {
        for (int e = 0; e < m; ++e) {
            int s = sum[static_cast<std::size_t>(e)];
            if (s > 2) return false;
            if (s + remaining_max[static_cast<std::size_t>(e)][static_cast<std::size_t>(next_tet)] < 2) return false;
        }
        return true;
    };

    // Depth-first over pi_pair choices.
    int t = 0;
    while (t >= 0) {
        if (t == n) {
            bool ok = true;
            for (int e = 0; e < m && ok; ++e) ok = sum[static_cast<std::size_t>(e)] == 2;
            if (ok) found.push_back(TautStructure{choice});
            --t;
            continue;
        }
        int next = choice[static_cast<std::size_t>(t)] + 1;
        if (choice[static_cast<std::size_t>(t)] >= 0) {
            for (int e = 0; e < m; ++e)
                sum[static_cast<std::size_t>(e)] -=
                    weight[static_cast<std::size_t>(e)][static_cast<std::size_t>(t)]
                          [static_cast<std::size_t>(choice[static_cast<std::size_t>(t)])];
        }
        if (next == 3) {
            choice[static_cast<std::size_t>(t)] = -1;
            --t;
            continue;
        }
        choice[static_cast<std::size_t>(t)] = next;
        for (int e = 0; e < m; ++e)
            sum[static_cast<std::size_t>(e)] +=
                weight[static_cast<std::size_t>(e)][static_cast<std::size_t>(t)][static_cast<std::size_t>(next)];
        if (feasible(t + 1)) ++t;
    }
    return found;
}

}  // namespace veering
