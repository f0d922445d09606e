#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "veering/angles.hpp"
#include "veering/errors.hpp"
#include "veering/triangulation.hpp"

namespace veering {

// Layered triangulations of once-punctured-torus bundles. Each letter of the
// cyclic monodromy word contributes one tetrahedron realizing a diagonal
// exchange of the fiber's two-triangle ideal triangulation; the word must
// contain both letters or the stack degenerates.
//
// Per-tetrahedron labeling: the tetrahedron is a square pillow with corners
//   0 = (0,0), 1 = (1,0), 2 = (1,1), 3 = (0,1)
// in the fiber frame of its layer. The exchanged diagonals are {0,2} (bottom)
// and {1,3} (top), so pair 1 carries pi; faces 1 and 3 are the bottom faces,
// faces 0 and 2 the top ones. Stacking tetrahedron j on tetrahedron i glues
// the top faces of i to the bottom faces of j with one of two patterns,
// depending on which fiber edge the letter of j exchanges:
//
//   R:  (i,2) -> (j,1) via (0,2,1,3)     L:  (i,2) -> (j,3) via (0,1,3,2)
//       (i,0) -> (j,3) via (3,1,2,0)         (i,0) -> (j,1) via (1,0,2,3)
//
// Both patterns are involutions with odd permutations, so the stack closes to
// an oriented triangulation once the word wraps around. Which letter is
// called R is a bookkeeping convention; it is pinned by the regression tests
// (bundle("RL") is the figure-eight complement, and tetrahedra between equal
// letters come out non-hinge).

struct MonodromyWord {
    std::string letters;

    static MonodromyWord parse(const std::string& s) {
        require(!s.empty(), "monodromy", "monodromy word is empty");
        bool has_r = false, has_l = false;
        for (char ch : s) {
            require(ch == 'R' || ch == 'L', "monodromy",
                    std::string("monodromy letters must be R or L, got '") + ch + "'");
            (ch == 'R' ? has_r : has_l) = true;
        }
        require(has_r && has_l, "monodromy",
                "monodromy word \"" + s + "\" must contain both R and L");
        return MonodromyWord{s};
    }

    int size() const { return static_cast<int>(letters.size()); }
};

struct Bundle {
    Triangulation tri;
    TautStructure taut;
};

inline Bundle bundle(const MonodromyWord& word) {
    int k = word.size();
    Bundle out;
    out.tri.name = "bundle-" + word.letters;
    out.tri.n = k;
    out.tri.glue.assign(static_cast<std::size_t>(k), {});
    auto set_glue = [&](int t, int f, int t2, const Perm4& p) {
        out.tri.glue[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)] = FaceGluing{t2, p};
    };
    const Perm4 r_a(0, 2, 1, 3), r_b(3, 1, 2, 0);
    const Perm4 l_a(0, 1, 3, 2), l_b(1, 0, 2, 3);
    for (int i = 0; i < k; ++i) {
        int j = (i + 1) % k;
        if (word.letters[static_cast<std::size_t>(j)] == 'R') {
            set_glue(i, 2, j, r_a);
            set_glue(j, 1, i, r_a);  // r_a is an involution
            set_glue(i, 0, j, r_b);
            set_glue(j, 3, i, r_b);
        } else {
            set_glue(i, 2, j, l_a);
            set_glue(j, 3, i, l_a);
            set_glue(i, 0, j, l_b);
            set_glue(j, 1, i, l_b);
        }
    }
    validate(out.tri);
    out.taut.pi_pair.assign(static_cast<std::size_t>(k), 1);
    return out;
}

inline Bundle bundle(const std::string& word) { return bundle(MonodromyWord::parse(word)); }

namespace detail {

inline std::string rotation_canonical(const std::string& w) {
    std::string best = w;
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::string rot = w.substr(i) + w.substr(0, i);
        if (rot < best) best = rot;
    }
    return best;
}

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace detail

/// Deterministic word corpus: every two-letter word up to rotation through
/// length min(6, max_len), the L^a R^b families through max_len, and seeded
/// random words of each longer length. Deduplicated by rotation only.
inline std::vector<MonodromyWord> corpus(int max_len, std::uint64_t seed) {
    require(max_len >= 2, "corpus", "corpus needs max_len >= 2");
    std::set<std::string> seen;
    std::vector<MonodromyWord> out;
    auto add = [&](const std::string& w) {
        std::string canon = detail::rotation_canonical(w);
        if (seen.insert(canon).second) out.push_back(MonodromyWord{canon});
    };

    for (int len = 2; len <= std::min(6, max_len); ++len) {
        for (int mask = 1; mask < (1 << len) - 1; ++mask) {
            std::string w;
            for (int i = 0; i < len; ++i) w += (mask >> i) & 1 ? 'R' : 'L';
            add(w);
        }
    }
    for (int len = 2; len <= max_len; ++len)
        for (int a = 1; a < len; ++a)
            add(std::string(static_cast<std::size_t>(a), 'L') +
                std::string(static_cast<std::size_t>(len - a), 'R'));
    std::uint64_t state = seed;
    for (int len = 7; len <= max_len; ++len) {
        int added = 0, tries = 0;
        while (added < 20 && tries < 200) {
            ++tries;
            std::uint64_t bits = detail::splitmix64(state);
            std::string w;
            for (int i = 0; i < len; ++i) w += (bits >> i) & 1 ? 'R' : 'L';
            if (w.find('R') == std::string::npos || w.find('L') == std::string::npos) continue;
            std::string canon = detail::rotation_canonical(w);
            if (seen.insert(canon).second) {
                out.push_back(MonodromyWord{canon});
                ++added;
            }
        }
    }
    return out;
}

}  // namespace veering
