#include "cupcube/invariance.hpp"

#include <sstream>

namespace cupcube {

InvarianceReport check_move_invariance(const LinkDiagram& d, const Representation& f,
                                       const GModule& m1, const GModule& m2, const GModule& m3,
                                       const TrilinearPsi& psi, const RMoveSite& site,
                                       u64 random_triples, u64 seed, const WeightConvention& conv) {
    InvarianceReport rep;
    MoveResult mr = apply_rmove(d, site);
    const LinkDiagram& d2 = mr.diagram;

    // Transport of the representation via the zero coloring.
    std::array<const GModule*, 3> mods{&m1, &m2, &m3};
    Representation f2;
    {
        std::vector<XElem> zeros;
        for (int a = 0; a < d.arc_count(); ++a) zeros.push_back(XElem{m1.zero(), f.at(a)});
        f2 = rep_of_xcoloring(transport_xcoloring(d, d2, mr, m1, zeros));
    }
    // Track a region through the move; prefer the diagram's unbounded face
    // but fall back to any face whose boundary survives the rewrite.
    int ub = -1;
    for (int cand = 0; cand < d.face_count() && ub < 0; ++cand) {
        int face = (cand + d.unbounded_face()) % d.face_count();
        for (const FaceDart& dart : d.face_boundary(face))
            if (mr.stable_edges.count(d.edge_label(dart.edge))) {
                ub = face;
                break;
            }
    }
    if (ub < 0) throw ComputeError("invariance: no region survives the move");
    int ub2 = d2.is_zero_crossing_unknot() ? 0 : corresponding_face(d, d2, mr.stable_edges, ub);

    std::array<std::vector<Vec>, 3> gens;
    std::array<std::unique_ptr<ColoringSpace>, 3> spaces;
    for (int s = 0; s < 3; ++s) {
        spaces[std::size_t(s)] = std::make_unique<ColoringSpace>(d, f, *mods[std::size_t(s)]);
        const ModuleBasis& full = spaces[std::size_t(s)]->full();
        for (int i = 0; i < full.rank(); ++i) gens[std::size_t(s)].push_back(full.gen(i));
    }

    // Transport linearity spot check in each slot.
    Rng rng(seed);
    for (int s = 0; s < 3; ++s) {
        const GModule& m = *mods[std::size_t(s)];
        const auto& gs = gens[std::size_t(s)];
        for (std::size_t i = 0; i + 1 < gs.size() && i < 4; ++i) {
            auto lift = [&](const Vec& v) {
                return transport_xcoloring(d, d2, mr, m,
                                           xcoloring_of(d, f, m, Coloring{v}));
            };
            Vec sum = vec_add_mod(gs[i], gs[i + 1], m.modulus());
            std::vector<XElem> ta = lift(gs[i]), tb = lift(gs[i + 1]), ts = lift(sum);
            for (int arc = 0; arc < d2.arc_count(); ++arc) {
                Vec want = vec_add_mod(ta[std::size_t(arc)].m, tb[std::size_t(arc)].m, m.modulus());
                if (ts[std::size_t(arc)].m != want) rep.transport_ok = false;
            }
        }
    }

    auto eval_pair = [&](const std::array<Vec, 3>& cols) {
        std::array<ShadowColoring, 3> sh, sh2;
        for (int s = 0; s < 3; ++s) {
            const GModule& m = *mods[std::size_t(s)];
            sh[std::size_t(s)] = shadow_extend(d, f, m, Coloring{cols[std::size_t(s)]}, ub);
            std::vector<XElem> moved =
                transport_xcoloring(d, d2, mr, m, xcoloring_of(d, f, m, Coloring{cols[std::size_t(s)]}));
            for (int a = 0; a < d2.arc_count(); ++a)
                if (moved[std::size_t(a)].g != f2.at(a))
                    throw ComputeError("invariance: transported coloring leaves the representation");
            sh2[std::size_t(s)] =
                shadow_extend(d2, f2, m, mpart_of_xcoloring(m, moved), ub2);
        }
        Vec before = trilinear_sum(d, f, m1, m2, m3, sh[0], sh[1], sh[2], psi, conv);
        Vec after = trilinear_sum(d2, f2, m1, m2, m3, sh2[0], sh2[1], sh2[2], psi, conv);
        ++rep.checked;
        if (before != after && rep.mismatches++ == 0) {
            std::ostringstream os;
            os << site.kind << ": before=" << psi.codomain().show(before)
               << " after=" << psi.codomain().show(after);
            rep.first_mismatch = os.str();
        }
    };

    for (const Vec& c1 : gens[0])
        for (const Vec& c2 : gens[1])
            for (const Vec& c3 : gens[2]) eval_pair({c1, c2, c3});

    for (u64 it = 0; it < random_triples; ++it) {
        std::array<Vec, 3> cols;
        for (int s = 0; s < 3; ++s) {
            const ModuleBasis& full = spaces[std::size_t(s)]->full();
            std::vector<i64> coeffs;
            for (int i = 0; i < full.rank(); ++i) coeffs.push_back(i64(rng.below(u64(full.order(i)))));
            cols[std::size_t(s)] = full.element(coeffs);
        }
        eval_pair(cols);
    }
    return rep;
}

}  // namespace cupcube
