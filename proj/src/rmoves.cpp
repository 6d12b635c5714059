#include "cupcube/rmoves.hpp"

#include <algorithm>

namespace cupcube {

namespace {

std::set<i64> all_labels(const LinkDiagram& d) {
    std::set<i64> out;
    for (int e = 0; e < d.edge_count(); ++e) out.insert(d.edge_label(e));
    return out;
}

// Replace the label at one specific occurrence.
void set_slot(std::vector<PDCrossing>& xs, std::pair<int, int> occ, i64 label) {
    xs[std::size_t(occ.first)].e[std::size_t(occ.second)] = label;
}

MoveResult r1_insert(const LinkDiagram& d, i64 edge_label, int sign, bool under_first) {
    int e = d.edge_index(edge_label);
    i64 m1 = d.max_edge_label() + 1, m2 = d.max_edge_label() + 2;
    std::vector<PDCrossing> xs = d.crossings();
    set_slot(xs, d.edge_head(e), m2);
    PDCrossing kink{};
    if (under_first)
        kink = sign > 0 ? PDCrossing{{edge_label, m2, m1, m1}} : PDCrossing{{edge_label, m1, m1, m2}};
    else
        kink = sign > 0 ? PDCrossing{{m1, m1, m2, edge_label}} : PDCrossing{{m1, edge_label, m2, m1}};
    xs.push_back(kink);

    MoveResult r{LinkDiagram::from_crossings(std::move(xs)), all_labels(d),
                 {{m1, edge_label}, {m2, edge_label}}, {}, {}, int(d.crossing_count()), -1};
    if (r.diagram.sign(r.patch_crossing) != sign) throw ComputeError("r1_insert: sign surgery bug");
    return r;
}

MoveResult r1_inverse(const LinkDiagram& d, int c) {
    if (c < 0 || c >= d.crossing_count()) throw InputError("r1_inv: no such crossing");
    const auto& t = d.crossing(c).e;
    // A kink repeats one label on two adjacent slots (the loop edge).
    i64 loop = -1;
    for (int s = 0; s < 4; ++s)
        if (t[std::size_t(s)] == t[std::size_t((s + 1) % 4)]) loop = t[std::size_t(s)];
    if (loop < 0) throw InputError("r1_inv: crossing is not a kink");
    i64 in = -1, out = -1;
    for (int s = 0; s < 4; ++s) {
        i64 lab = t[std::size_t(s)];
        if (lab == loop) continue;
        int eidx = d.edge_index(lab);
        if (d.edge_head(eidx) == std::pair{c, s}) in = lab;
        if (d.edge_tail(eidx) == std::pair{c, s}) out = lab;
    }
    if (in < 0 || out < 0 || in == out) {
        // Whole component is the kink: removing it leaves the bare unknot.
        if (d.crossing_count() == 1) {
            MoveResult r{LinkDiagram::zero_crossing_unknot(), {}, {}, {loop, in < 0 ? out : in}, {}, -1, -1};
            return r;
        }
        throw InputError("r1_inv: degenerate kink in a larger diagram");
    }
    std::vector<PDCrossing> xs = d.crossings();
    set_slot(xs, d.edge_head(d.edge_index(out)), in);
    xs.erase(xs.begin() + c);

    MoveResult r;
    r.stable_edges = all_labels(d);
    r.stable_edges.erase(loop);
    r.stable_edges.erase(out);
    r.removed_edges = {loop, out};
    r.merged_to[out] = in;
    r.diagram = LinkDiagram::from_crossings(std::move(xs));
    return r;
}

MoveResult r2_insert(const LinkDiagram& d, i64 e1_label, i64 e2_label, int face, bool over) {
    if (e1_label == e2_label) throw InputError("r2: edges must be distinct");
    int e1 = d.edge_index(e1_label), e2 = d.edge_index(e2_label);
    if (face < 0 || face >= d.face_count()) throw InputError("r2: no such face");
    auto side_on = [&](int e) {
        if (d.face_left(e) == face) return Side::left;
        if (d.face_right(e) == face) return Side::right;
        throw InputError("r2: edge does not bound the face");
    };
    Side s1 = side_on(e1), s2 = side_on(e2);

    i64 m1 = d.max_edge_label() + 1, m2 = m1 + 1, m3 = m1 + 2, m4 = m1 + 3;
    std::vector<PDCrossing> xs = d.crossings();
    set_slot(xs, d.edge_head(e1), m2);
    set_slot(xs, d.edge_head(e2), m4);

    // The finger's connecting chords inside the face must not cross, which
    // forces the order of the two new crossings along the target strand:
    // the moving strand meets the target first (along the target's own
    // orientation) exactly when the two edges show different sides to the
    // face.
    bool k1_first_along_target = s1 != s2;
    PDCrossing k1{}, k2{};
    const i64 a = e1_label, b = e2_label;
    if (over) {  // moving strand passes over the target
        if (s2 == Side::left)
            k1 = k1_first_along_target ? PDCrossing{{b, m1, m3, a}} : PDCrossing{{m3, m1, m4, a}},
            k2 = k1_first_along_target ? PDCrossing{{m3, m1, m4, m2}} : PDCrossing{{b, m1, m3, m2}};
        else
            k1 = k1_first_along_target ? PDCrossing{{b, a, m3, m1}} : PDCrossing{{m3, a, m4, m1}},
            k2 = k1_first_along_target ? PDCrossing{{m3, m2, m4, m1}} : PDCrossing{{b, m2, m3, m1}};
    } else {
        if (s2 == Side::left)
            k1 = k1_first_along_target ? PDCrossing{{a, b, m1, m3}} : PDCrossing{{a, m3, m1, m4}},
            k2 = k1_first_along_target ? PDCrossing{{m1, m4, m2, m3}} : PDCrossing{{m1, m3, m2, b}};
        else
            k1 = k1_first_along_target ? PDCrossing{{a, m3, m1, b}} : PDCrossing{{a, m4, m1, m3}},
            k2 = k1_first_along_target ? PDCrossing{{m1, m3, m2, m4}} : PDCrossing{{m1, b, m2, m3}};
    }
    xs.push_back(k1);
    xs.push_back(k2);

    MoveResult r;
    r.diagram = LinkDiagram::from_crossings(std::move(xs));
    r.stable_edges = all_labels(d);
    r.new_from = {{m1, e1_label}, {m2, e1_label}, {m3, e2_label}, {m4, e2_label}};
    int ka = r.diagram.crossing_count() - 2, kb = ka + 1;
    if (r.diagram.sign(ka) + r.diagram.sign(kb) != 0) throw ComputeError("r2_insert: signs not opposite");
    // The bigon between the two new crossings is bounded by m1 and m3.
    for (int f = 0; f < r.diagram.face_count(); ++f) {
        const auto& bd = r.diagram.face_boundary(f);
        if (bd.size() != 2) continue;
        std::set<i64> labs{r.diagram.edge_label(bd[0].edge), r.diagram.edge_label(bd[1].edge)};
        if (labs == std::set<i64>{m1, m3}) {
            r.patch_face = f;
            break;
        }
    }
    if (r.patch_face < 0) throw ComputeError("r2_insert: no bigon created");
    return r;
}

MoveResult r2_inverse(const LinkDiagram& d, int face) {
    if (face < 0 || face >= d.face_count()) throw InputError("r2_inv: no such face");
    const auto& bd = d.face_boundary(face);
    if (bd.size() != 2 || bd[0].edge == bd[1].edge) throw InputError("r2_inv: face is not a removable bigon");
    auto slot_is_over = [&](std::pair<int, int> occ) { return occ.second == 1 || occ.second == 3; };
    int s_over = -1, s_under = -1;
    for (const FaceDart& dart : bd) {
        bool over_both = slot_is_over(d.edge_tail(dart.edge)) && slot_is_over(d.edge_head(dart.edge));
        bool under_both = !slot_is_over(d.edge_tail(dart.edge)) && !slot_is_over(d.edge_head(dart.edge));
        if (over_both) s_over = dart.edge;
        if (under_both) s_under = dart.edge;
    }
    if (s_over < 0 || s_under < 0) throw InputError("r2_inv: bigon sides are not over/under");
    int ka = d.edge_tail(s_under).first, kb = d.edge_head(s_under).first;
    std::set<int> cs{ka, kb, d.edge_tail(s_over).first, d.edge_head(s_over).first};
    if (cs != std::set<int>{ka, kb} || ka == kb) throw InputError("r2_inv: bigon is not between two crossings");
    if (d.sign(ka) + d.sign(kb) != 0) throw InputError("r2_inv: crossings have equal signs");

    i64 u_in = d.crossing(ka).e[0], u_out = d.crossing(kb).e[2];
    int ko1 = d.edge_tail(s_over).first, ko2 = d.edge_head(s_over).first;
    i64 o_in = d.crossing(ko1).e[std::size_t(d.over_in_slot(ko1))];
    i64 o_out = d.crossing(ko2).e[std::size_t(d.over_in_slot(ko2) ^ 2)];

    std::vector<PDCrossing> xs;
    for (int c = 0; c < d.crossing_count(); ++c)
        if (c != ka && c != kb) xs.push_back(d.crossing(c));

    bool under_closes = (u_in == u_out), over_closes = (o_in == o_out);
    if (xs.empty()) {
        if (d.component_count() == 1) {
            MoveResult r;
            r.diagram = LinkDiagram::zero_crossing_unknot();
            for (i64 lab : all_labels(d)) r.removed_edges.push_back(lab);
            return r;
        }
        throw InputError("r2_inv: removal would split the diagram");
    }
    if (under_closes || over_closes)
        throw InputError("r2_inv: removal would detach a crossingless component");

    auto relocate = [&](i64 from, i64 to) {
        // from's head occurrence lives in a surviving crossing
        auto occ = d.edge_head(d.edge_index(from));
        int c = occ.first;
        if (c == ka || c == kb) throw InputError("r2_inv: bigon strands re-enter the patch");
        int shift = 0;
        if (c > ka) ++shift;
        if (c > kb) ++shift;
        xs[std::size_t(c - shift)].e[std::size_t(occ.second)] = to;
    };
    relocate(u_out, u_in);
    relocate(o_out, o_in);

    MoveResult r;
    r.diagram = LinkDiagram::from_crossings(std::move(xs));
    r.stable_edges = all_labels(d);
    for (i64 lab : {d.edge_label(s_under), u_out, d.edge_label(s_over), o_out}) {
        r.stable_edges.erase(lab);
        r.removed_edges.push_back(lab);
    }
    r.merged_to[u_out] = u_in;
    r.merged_to[o_out] = o_in;
    return r;
}

MoveResult r3_move(const LinkDiagram& d, int face) {
    if (face < 0 || face >= d.face_count()) throw InputError("r3: no such face");
    const auto& bd = d.face_boundary(face);
    if (bd.size() != 3) throw InputError("r3: face is not a triangle");
    std::set<int> edges{bd[0].edge, bd[1].edge, bd[2].edge};
    if (edges.size() != 3) throw InputError("r3: degenerate triangle");

    auto end_type = [&](std::pair<int, int> occ) { return occ.second == 1 || occ.second == 3; };  // over?
    int n_oo = 0, n_uu = 0, n_mixed = 0;
    for (int e : edges) {
        bool t = end_type(d.edge_tail(e)), h = end_type(d.edge_head(e));
        if (t && h) ++n_oo;
        else if (!t && !h) ++n_uu;
        else ++n_mixed;
    }
    if (n_oo != 1 || n_uu != 1 || n_mixed != 1)
        throw InputError("r3: triangle is not admissible (cyclic over/under pattern)");

    std::vector<PDCrossing> xs = d.crossings();
    for (int side : edges) {
        auto [p, pslot] = d.edge_tail(side);   // side edge leaves its pass at P
        auto [q, qslot] = d.edge_head(side);   // and arrives at Q
        int p_in = (pslot == 2) ? 0 : (pslot ^ 2);
        int q_out = (qslot == 0) ? 2 : (qslot ^ 2);
        i64 outer_in = d.crossing(p).e[std::size_t(p_in)];
        i64 outer_out = d.crossing(q).e[std::size_t(q_out)];
        i64 side_lab = d.edge_label(side);
        // Strand order swaps: outer_in -> Q -> side -> P -> outer_out.
        xs[std::size_t(p)].e[std::size_t(p_in)] = side_lab;
        xs[std::size_t(p)].e[std::size_t(pslot)] = outer_out;
        xs[std::size_t(q)].e[std::size_t(qslot)] = outer_in;
        xs[std::size_t(q)].e[std::size_t(q_out)] = side_lab;
    }

    MoveResult r;
    r.diagram = LinkDiagram::from_crossings(std::move(xs));
    r.stable_edges = all_labels(d);
    std::set<i64> side_labels;
    for (int e : edges) {
        r.stable_edges.erase(d.edge_label(e));
        side_labels.insert(d.edge_label(e));
    }
    for (int c = 0; c < d.crossing_count(); ++c)
        if (r.diagram.sign(c) != d.sign(c)) throw ComputeError("r3: sign changed");
    for (int f = 0; f < r.diagram.face_count(); ++f) {
        const auto& nb = r.diagram.face_boundary(f);
        if (nb.size() != 3) continue;
        std::set<i64> labs;
        for (const FaceDart& dart : nb) labs.insert(r.diagram.edge_label(dart.edge));
        if (labs == side_labels) {
            r.patch_face = f;
            break;
        }
    }
    return r;
}

}  // namespace

MoveResult apply_rmove(const LinkDiagram& d, const RMoveSite& site) {
    if (d.is_zero_crossing_unknot()) throw InputError("rmove: zero-crossing diagram has no sites");
    if (site.kind == "r1") return r1_insert(d, site.edge, site.sign, site.under_first);
    if (site.kind == "r1_inv") return r1_inverse(d, site.crossing);
    if (site.kind == "r2") return r2_insert(d, site.edge, site.target, site.face, site.over);
    if (site.kind == "r2_inv") return r2_inverse(d, site.face);
    if (site.kind == "r3") return r3_move(d, site.face);
    throw InputError("rmove: unknown kind '" + site.kind + "'");
}

std::vector<int> find_r3_faces(const LinkDiagram& d) {
    std::vector<int> out;
    for (int f = 0; f < d.face_count(); ++f) {
        try {
            r3_move(d, f);
            out.push_back(f);
        } catch (const InputError&) {
        }
    }
    return out;
}

std::vector<int> find_r2_inverse_faces(const LinkDiagram& d) {
    std::vector<int> out;
    for (int f = 0; f < d.face_count(); ++f) {
        try {
            r2_inverse(d, f);
            out.push_back(f);
        } catch (const InputError&) {
        }
    }
    return out;
}

int corresponding_face(const LinkDiagram& before, const LinkDiagram& after,
                       const std::set<i64>& stable_edges, int face) {
    for (const FaceDart& dart : before.face_boundary(face)) {
        i64 lab = before.edge_label(dart.edge);
        if (!stable_edges.count(lab)) continue;
        return after.face_of(after.edge_index(lab), dart.side);
    }
    throw ComputeError("corresponding_face: no stable boundary edge");
}

std::vector<XElem> xcoloring_of(const LinkDiagram& d, const Representation& f, const GModule& mod,
                                const Coloring& c) {
    std::vector<XElem> out;
    for (int a = 0; a < d.arc_count(); ++a) out.push_back(XElem{c.arc_m(d, mod, a), f.at(a)});
    return out;
}

Representation rep_of_xcoloring(const std::vector<XElem>& colors) {
    Representation f;
    for (const XElem& x : colors) f.arc_to_g.push_back(x.g);
    return f;
}

Coloring mpart_of_xcoloring(const GModule&, const std::vector<XElem>& colors) {
    Coloring c;
    for (const XElem& x : colors) c.m.insert(c.m.end(), x.m.begin(), x.m.end());
    return c;
}

std::vector<XElem> transport_xcoloring(const LinkDiagram& before, const LinkDiagram& after,
                                       const MoveResult& corr, const GModule& mod,
                                       const std::vector<XElem>& colors) {
    std::vector<std::optional<XElem>> out(std::size_t(after.arc_count()));
    auto assign = [&](int arc, const XElem& x) {
        if (out[std::size_t(arc)]) {
            if (!(*out[std::size_t(arc)] == x)) throw ComputeError("transport: conflicting seed colours");
            return;
        }
        out[std::size_t(arc)] = x;
    };
    if (after.is_zero_crossing_unknot()) {
        // All colours of the source diagram's single strand agree.
        assign(0, colors.at(0));
    } else {
        for (int e = 0; e < after.edge_count(); ++e) {
            i64 lab = after.edge_label(e);
            if (!corr.stable_edges.count(lab)) continue;
            int old_arc = before.arc_of_edge(before.edge_index(lab));
            assign(after.arc_of_edge(e), colors.at(std::size_t(old_arc)));
        }
        // Solve patch-internal arcs from the crossing relations.
        bool progress = true;
        while (progress) {
            progress = false;
            for (int c = 0; c < after.crossing_count(); ++c) {
                int ain = after.under_in_arc(c), aover = after.over_arc(c), aout = after.under_out_arc(c);
                auto& in = out[std::size_t(ain)];
                auto& ov = out[std::size_t(aover)];
                auto& ot = out[std::size_t(aout)];
                int eps = after.sign(c);
                auto op = [&](const XElem& x, const XElem& y) {
                    return eps > 0 ? quandle_op(mod, x, y) : quandle_op_inv(mod, x, y);
                };
                auto op_inv = [&](const XElem& x, const XElem& y) {
                    return eps > 0 ? quandle_op_inv(mod, x, y) : quandle_op(mod, x, y);
                };
                if (in && ov && !ot) {
                    ot = op(*in, *ov);
                    progress = true;
                } else if (ot && ov && !in) {
                    in = op_inv(*ot, *ov);
                    progress = true;
                } else if (aover == aout && in && !ot) {  // kink: x <| y = y forces y = x
                    ot = *in;
                    progress = true;
                } else if (aover == ain && ot && !in) {   // kink: x <| x = z forces x = z
                    in = *ot;
                    progress = true;
                }
            }
        }
    }
    std::vector<XElem> result;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (!out[i]) throw ComputeError("transport: arc " + std::to_string(i) + " undetermined");
        result.push_back(*out[i]);
    }
    // The transported assignment must again be a colouring.
    if (!after.is_zero_crossing_unknot()) {
        for (int c = 0; c < after.crossing_count(); ++c) {
            const XElem& in = result[std::size_t(after.under_in_arc(c))];
            const XElem& ov = result[std::size_t(after.over_arc(c))];
            const XElem& ot = result[std::size_t(after.under_out_arc(c))];
            XElem expect = after.sign(c) > 0 ? quandle_op(mod, in, ov) : quandle_op_inv(mod, in, ov);
            if (!(expect == ot)) throw ComputeError("transport: result is not a colouring");
        }
    }
    return result;
}

}  // namespace cupcube
