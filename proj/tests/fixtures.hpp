#pragma once

#include <array>
#include <string>

#include "veering/angles.hpp"
#include "veering/triangulation.hpp"

namespace fixtures {

inline veering::Triangulation make_tri(const std::string& name, int n,
                                       const int glue[][4][5]) {
    veering::Triangulation tri;
    tri.name = name;
    tri.n = n;
    tri.glue.assign(static_cast<std::size_t>(n), {});
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f)
            tri.glue[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)] = veering::FaceGluing{
                glue[t][f][0],
                veering::Perm4(glue[t][f][1], glue[t][f][2], glue[t][f][3], glue[t][f][4])};
    return tri;
}

// Figure-eight knot complement, two tetrahedra. Entered by hand; union-find
// over the 12 edge incidences (done by hand) gives two edge classes of
// degree six, with the layered taut structure at pi_pair = (0, 2).
inline veering::Triangulation fig8() {
    static const int g[2][4][5] = {
        {{1, 2, 0, 3, 1}, {1, 3, 1, 2, 0}, {1, 3, 2, 0, 1}, {1, 1, 0, 2, 3}},
        {{0, 2, 3, 1, 0}, {0, 3, 1, 2, 0}, {0, 1, 3, 0, 2}, {0, 1, 0, 2, 3}},
    };
    return make_tri("fig8", 2, g);
}

inline veering::TautStructure fig8_taut() { return veering::TautStructure{{0, 2}}; }

}  // namespace fixtures
