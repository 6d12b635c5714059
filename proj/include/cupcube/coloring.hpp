#pragma once

#include "cupcube/diagram.hpp"
#include "cupcube/gmodule.hpp"
#include "cupcube/snf.hpp"

namespace cupcube {

// Arc -> group element assignment satisfying every Wirtinger relation.
struct Representation {
    std::vector<int> arc_to_g;
    int at(int arc) const { return arc_to_g[std::size_t(arc)]; }
    static Representation constant(const LinkDiagram& d, int g) {
        return Representation{std::vector<int>(std::size_t(d.arc_count()), g)};
    }
};

// Quandle X = M x G: (a,g) <| (b,h) = ((a-b)h + b, h^-1 g h).
struct XElem {
    Vec m;
    int g;
    bool operator==(const XElem&) const = default;
};

XElem quandle_op(const GModule& mod, const XElem& x, const XElem& y);
XElem quandle_op_inv(const GModule& mod, const XElem& x, const XElem& y);

// First crossing whose relation fails, or nullopt if f is a representation.
std::optional<int> check_representation(const LinkDiagram& d, const Representation& f,
                                        const FiniteGroup& g);

// The coloring condition as a linear system over Z/n: a row vector x of arc
// M-parts (arc-major blocks of width rank) is a coloring iff x*A = 0.  Shape
// (rank*arcs) x (rank*crossings).
IntMat coloring_system(const LinkDiagram& d, const Representation& f, const GModule& mod);

// An X-coloring over f, stored as the flat vector of arc M-parts.
struct Coloring {
    Vec m;  // rank * arc_count entries
    Vec arc_m(const LinkDiagram&, const GModule& mod, int arc) const {
        return Vec(m.begin() + arc * mod.rank(), m.begin() + (arc + 1) * mod.rank());
    }
};

// Col_X(D_f) together with its split Col = Col_red + M_diag, where Col_red is
// the kernel of the system augmented by "M-part of arc 0 vanishes".
class ColoringSpace {
  public:
    ColoringSpace(const LinkDiagram& d, Representation f, const GModule& mod);

    const LinkDiagram& diagram() const { return *d_; }
    const Representation& rep() const { return f_; }
    const GModule& module() const { return *mod_; }

    const ModuleBasis& full() const { return full_; }
    const ModuleBasis& reduced() const { return reduced_; }
    const std::vector<Vec>& diagonal_gens() const { return diag_gens_; }

    u128 count() const { return full_.cardinality(); }
    u128 reduced_count() const { return reduced_.cardinality(); }

    bool is_coloring(const Vec& m) const;
    // Unique split x = diag(m0) + r with r in Col_red; returns (m0, r).
    std::pair<Vec, Vec> split(const Vec& x) const;
    Vec diagonal_coloring(const Vec& m0) const;

  private:
    const LinkDiagram* d_;
    Representation f_;
    const GModule* mod_;
    IntMat system_;
    ModuleBasis full_, reduced_;
    std::vector<Vec> diag_gens_;
};

// Coloring plus region labels (per face), unbounded region -> 0.
struct ShadowColoring {
    Coloring c;
    std::vector<Vec> region;  // indexed by face
    int unbounded;
};

// Propagates region labels across arcs by lambda_left = (lambda_right - b)h + b
// and verifies global consistency on every edge.
ShadowColoring shadow_extend(const LinkDiagram& d, const Representation& f, const GModule& mod,
                             const Coloring& c, int unbounded_face = -1);

}  // namespace cupcube
