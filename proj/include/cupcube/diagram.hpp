#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "cupcube/common.hpp"

namespace cupcube {

// One PD crossing X(a,b,c,d): the four incident edge labels listed
// counterclockwise starting from the incoming under-edge.  Slots:
//
//   slot 0 (a): incoming under-edge
//   slot 1 (b): over-edge; the over-strand leaves here at a positive
//               crossing and enters here at a negative one
//   slot 2 (c): outgoing under-edge
//   slot 3 (d): the other over-edge
//
// With the under-strand drawn pointing north, slot 1 sits east and slot 3
// west; the crossing is positive exactly when the over-strand runs west to
// east (enters at slot 3).
struct PDCrossing {
    std::array<i64, 4> e;
    bool operator==(const PDCrossing&) const = default;
};

enum class Side { left, right };

struct FaceDart {
    int edge;   // dense edge index
    Side side;  // which side of the (oriented) edge faces this region
    bool operator==(const FaceDart&) const = default;
};

struct WirtingerRelation {
    int crossing;
    int under_in_arc;   // alpha
    int over_arc;       // beta
    int under_out_arc;  // gamma = beta^{-eps} alpha beta^{eps}
    int sign;
};

struct WirtingerPresentation {
    int generators;  // one per arc
    std::vector<WirtingerRelation> relations;
};

class LinkDiagram {
  public:
    LinkDiagram() = default;  // empty; assign from a factory before use

    // Accepts "X(1,4,2,5) X(3,6,4,1) ..." or "[[1,4,2,5],[3,6,4,1],...]".
    static LinkDiagram parse(const std::string& text);
    static LinkDiagram from_crossings(std::vector<PDCrossing> crossings);
    // Crossingless unknot diagram: one arc, two faces.  Not expressible as a
    // PD code but needed as the base case of several operations.
    static LinkDiagram zero_crossing_unknot();

    bool is_zero_crossing_unknot() const { return unknot0_; }
    int crossing_count() const { return int(crossings_.size()); }
    const std::vector<PDCrossing>& crossings() const { return crossings_; }
    const PDCrossing& crossing(int c) const { return crossings_[std::size_t(c)]; }

    // --- edges ---
    int edge_count() const { return int(edge_labels_.size()); }
    i64 edge_label(int e) const { return edge_labels_[std::size_t(e)]; }
    int edge_index(i64 label) const;  // throws if unknown
    i64 max_edge_label() const { return edge_labels_.empty() ? 0 : edge_labels_.back(); }
    std::pair<int, int> edge_tail(int e) const { return tail_[std::size_t(e)]; }  // (crossing, slot)
    std::pair<int, int> edge_head(int e) const { return head_[std::size_t(e)]; }
    int edge_at(int c, int slot) const { return edge_index(crossings_[std::size_t(c)].e[std::size_t(slot)]); }

    // --- crossings ---
    int sign(int c) const { return sign_[std::size_t(c)]; }
    int over_in_slot(int c) const { return over_in_slot_[std::size_t(c)]; }
    int writhe() const;

    // --- arcs (maximal over-strands, numbered by smallest edge label) ---
    int arc_count() const { return int(arcs_.size()); }
    const std::vector<int>& arc_edges(int a) const { return arcs_[std::size_t(a)]; }
    int arc_of_edge(int e) const { return arc_of_edge_[std::size_t(e)]; }
    int under_in_arc(int c) const { return arc_of_edge(edge_at(c, 0)); }
    int under_out_arc(int c) const { return arc_of_edge(edge_at(c, 2)); }
    int over_arc(int c) const { return arc_of_edge(edge_at(c, 1)); }

    // --- components ---
    int component_count() const { return component_count_; }
    int component_of_edge(int e) const { return component_of_edge_[std::size_t(e)]; }
    int component_of_arc(int a) const;

    // --- faces ---
    int face_count() const { return int(faces_.size()); }
    const std::vector<FaceDart>& face_boundary(int f) const { return faces_[std::size_t(f)]; }
    int face_of(int edge, Side side) const {
        return face_of_dart_[std::size_t(edge) * 2 + (side == Side::left ? 0 : 1)];
    }
    int face_left(int e) const { return face_of(e, Side::left); }
    int face_right(int e) const { return face_of(e, Side::right); }
    // Quadrant q at crossing c lies between slots q and q+1 (mod 4).
    int quadrant_face(int c, int q) const { return quadrant_face_[std::size_t(c)][std::size_t(q)]; }
    int unbounded_face() const { return unbounded_face_; }

    WirtingerPresentation wirtinger() const;

    LinkDiagram mirrored() const;  // over/under swapped at every crossing
    LinkDiagram reversed() const;  // every component's orientation reversed

    std::string pd_string() const;
    LinkDiagram canonically_relabeled() const;

  private:
    void build();  // validates and derives everything

    bool unknot0_ = false;
    std::vector<PDCrossing> crossings_;
    std::vector<i64> edge_labels_;
    std::map<i64, int> edge_index_;
    std::vector<std::array<std::pair<int, int>, 2>> occ_;  // per edge: two (crossing, slot)
    std::vector<std::pair<int, int>> tail_, head_;
    std::vector<int> sign_, over_in_slot_;
    std::vector<std::vector<int>> arcs_;
    std::vector<int> arc_of_edge_;
    std::vector<int> component_of_edge_;
    int component_count_ = 0;
    std::vector<std::vector<FaceDart>> faces_;
    std::vector<int> face_of_dart_;
    std::vector<std::array<int, 4>> quadrant_face_;
    int unbounded_face_ = 0;
};

// True if some edge relabeling carries one diagram's crossing list onto the
// other's (slot-exact; crossing order irrelevant).
bool pd_isomorphic(const LinkDiagram& a, const LinkDiagram& b);

}  // namespace cupcube
