#pragma once

#include "veering/angles.hpp"
#include "veering/coloring.hpp"
#include "veering/cusp.hpp"
#include "veering/homology.hpp"
#include "veering/ladders.hpp"
#include "veering/triangulation.hpp"

namespace veering {

/// Everything derived from a triangulation with a veering taut structure,
/// built once and shared by the rescue and holonomy constructions.
struct Analysis {
    Triangulation tri;
    EdgeTable edges;
    CuspComplex cusp;
    VeeringData veering;
    LadderDecomposition ladders;
    HomologyBasis basis;
};

inline Analysis analyze(const Triangulation& tri, const TautStructure& taut) {
    Analysis a;
    a.tri = tri;
    validate(a.tri);
    a.edges = edge_classes(a.tri);
    a.cusp = build_cusp_complex(a.tri, a.edges);
    AngleCheck chk = check_angle_vector(a.tri, a.edges, taut.angles());
    require(chk.cls == AngleClass::taut, "not-taut", "the pi-pair assignment is not a taut structure");
    a.veering = build_veering(a.tri, a.edges, a.cusp, taut);
    a.ladders = build_ladders(a.tri, a.edges, a.cusp, a.veering);
    a.basis = homology_basis(a.cusp);
    return a;
}

}  // namespace veering
