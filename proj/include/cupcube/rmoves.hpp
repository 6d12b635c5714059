#pragma once

#include <set>

#include "cupcube/coloring.hpp"
#include "cupcube/diagram.hpp"

namespace cupcube {

// Where and how to rewrite.  kind: "r1" (insert kink), "r1_inv",
// "r2" (push edge over/under target edge across a face), "r2_inv",
// "r3" (slide across an admissible triangle).
struct RMoveSite {
    std::string kind;
    i64 edge = 0;            // r1: edge to kink; r2: moving edge
    i64 target = 0;          // r2: edge being crossed
    int face = -1;           // r2: shared face; r2_inv: bigon; r3: triangle
    int crossing = -1;       // r1_inv: kink crossing
    int sign = 1;            // r1: kink sign
    bool under_first = true; // r1: strand passes under its loop first
    bool over = true;        // r2: moving edge passes over
};

struct MoveResult {
    LinkDiagram diagram;
    // Labels present in both diagrams whose arc colour is unchanged by the
    // move (everything outside the rewritten patch).
    std::set<i64> stable_edges;
    std::map<i64, i64> new_from;  // created label -> source label
    std::vector<i64> removed_edges;
    std::map<i64, i64> merged_to;  // removed label -> absorbing label
    int patch_crossing = -1;       // r1: the kink crossing in the new diagram
    int patch_face = -1;           // r2: bigon face / r3: triangle face in the new diagram
};

MoveResult apply_rmove(const LinkDiagram& d, const RMoveSite& site);

// Admissible R3 triangles (one over-over side, one under-under, one mixed).
std::vector<int> find_r3_faces(const LinkDiagram& d);
// Bigon faces removable by an inverse R2.
std::vector<int> find_r2_inverse_faces(const LinkDiagram& d);

// Image of a face under a move, located through a stable boundary dart.
int corresponding_face(const LinkDiagram& before, const LinkDiagram& after,
                       const std::set<i64>& stable_edges, int face);

// Carries an X-coloring (arc -> (m, g)) through a move: colours of arcs
// holding stable edges are copied, patch-internal arcs are re-solved from the
// crossing relations, and every relation of the target diagram is verified.
std::vector<XElem> transport_xcoloring(const LinkDiagram& before, const LinkDiagram& after,
                                       const MoveResult& corr, const GModule& mod,
                                       const std::vector<XElem>& colors);

std::vector<XElem> xcoloring_of(const LinkDiagram& d, const Representation& f, const GModule& mod,
                                const Coloring& c);
Representation rep_of_xcoloring(const std::vector<XElem>& colors);
Coloring mpart_of_xcoloring(const GModule& mod, const std::vector<XElem>& colors);

}  // namespace cupcube
