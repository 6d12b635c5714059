#include "cupcube/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <sstream>

namespace cupcube {

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(std::size_t(n)) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[std::size_t(x)] == x ? x : p[std::size_t(x)] = find(p[std::size_t(x)]); }
    void unite(int a, int b) { p[std::size_t(find(a))] = find(b); }
};

std::vector<i64> parse_int_list(const std::string& s, std::size_t& pos, char open, char close) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos >= s.size() || s[pos] != open) throw InputError("PD parse: expected '" + std::string(1, open) + "'");
    ++pos;
    std::vector<i64> out;
    for (;;) {
        while (pos < s.size() && (std::isspace(static_cast<unsigned char>(s[pos])) || s[pos] == ',')) ++pos;
        if (pos >= s.size()) throw InputError("PD parse: unterminated list");
        if (s[pos] == close) {
            ++pos;
            return out;
        }
        if (!std::isdigit(static_cast<unsigned char>(s[pos]))) throw InputError("PD parse: expected integer");
        i64 v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > (i64(1) << 40)) throw InputError("PD parse: edge label too large");
            ++pos;
        }
        out.push_back(v);
    }
}

}  // namespace

LinkDiagram LinkDiagram::parse(const std::string& text) {
    std::vector<PDCrossing> crossings;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
            ++pos;
    };
    skip_ws();
    if (pos >= text.size()) throw InputError("PD parse: empty input");
    if (text[pos] == '[') {
        // [[a,b,c,d],[...],...]
        ++pos;
        for (;;) {
            skip_ws();
            if (pos >= text.size()) throw InputError("PD parse: unterminated bracket list");
            if (text[pos] == ']') {
                ++pos;
                break;
            }
            auto vals = parse_int_list(text, pos, '[', ']');
            if (vals.size() != 4) throw InputError("PD parse: crossing needs exactly 4 edges");
            crossings.push_back(PDCrossing{{vals[0], vals[1], vals[2], vals[3]}});
        }
        skip_ws();
        if (pos != text.size()) throw InputError("PD parse: trailing input");
    } else {
        while (pos < text.size()) {
            skip_ws();
            if (pos >= text.size()) break;
            char c = text[pos];
            if (c != 'X' && c != 'x') throw InputError("PD parse: expected 'X('");
            ++pos;
            auto vals = parse_int_list(text, pos, '(', ')');
            if (vals.size() != 4) throw InputError("PD parse: crossing needs exactly 4 edges");
            crossings.push_back(PDCrossing{{vals[0], vals[1], vals[2], vals[3]}});
        }
    }
    if (crossings.empty()) throw InputError("PD parse: no crossings");
    return from_crossings(std::move(crossings));
}

LinkDiagram LinkDiagram::from_crossings(std::vector<PDCrossing> crossings) {
    LinkDiagram d;
    d.crossings_ = std::move(crossings);
    d.build();
    return d;
}

LinkDiagram LinkDiagram::zero_crossing_unknot() {
    LinkDiagram d;
    d.unknot0_ = true;
    d.arcs_ = {{}};
    d.arc_of_edge_ = {};
    d.component_count_ = 1;
    d.faces_ = {{}, {}};  // unbounded, inner
    d.unbounded_face_ = 0;
    return d;
}

int LinkDiagram::edge_index(i64 label) const {
    auto it = edge_index_.find(label);
    if (it == edge_index_.end()) throw InputError("unknown edge label " + std::to_string(label));
    return it->second;
}

void LinkDiagram::build() {
    const int nc = int(crossings_.size());
    if (nc == 0) throw InputError("diagram: no crossings");

    // Edge occurrence map; every label must appear exactly twice.
    std::map<i64, std::vector<std::pair<int, int>>> occ_by_label;
    for (int c = 0; c < nc; ++c) {
        const auto& t = crossings_[std::size_t(c)].e;
        for (int s = 0; s < 4; ++s) {
            if (t[std::size_t(s)] <= 0) throw InputError("diagram: edge labels must be positive");
            occ_by_label[t[std::size_t(s)]].push_back({c, s});
        }
        if (t[0] == t[2]) throw InputError("diagram: under-strand enters and leaves on the same edge");
        if (t[1] == t[3]) throw InputError("diagram: over-strand enters and leaves on the same edge");
    }
    for (auto& [label, occ] : occ_by_label)
        if (occ.size() != 2)
            throw InputError("diagram: edge " + std::to_string(label) + " appears " +
                             std::to_string(occ.size()) + " times (must be exactly 2)");

    edge_labels_.clear();
    edge_index_.clear();
    for (auto& [label, occ] : occ_by_label) {
        edge_index_[label] = int(edge_labels_.size());
        edge_labels_.push_back(label);
    }
    const int ne = int(edge_labels_.size());
    occ_.resize(std::size_t(ne));
    for (auto& [label, occ] : occ_by_label) {
        int e = edge_index_[label];
        occ_[std::size_t(e)] = {occ[0], occ[1]};
    }

    // Orientation resolution.  role 1 = edge arrives here (head), 0 = edge
    // leaves here (tail).  Under-slots are fixed; the rest propagates along
    // two constraints: an edge's two occurrences have opposite roles, and the
    // two over-slots of a crossing have opposite roles.
    std::vector<std::array<int, 4>> role(std::size_t(nc), {-1, -1, -1, -1});
    std::queue<std::pair<int, int>> work;
    auto set_role = [&](int c, int s, int r) {
        int& cur = role[std::size_t(c)][std::size_t(s)];
        if (cur == r) return;
        if (cur != -1) throw InputError("diagram: inconsistent orientations");
        cur = r;
        work.push({c, s});
    };
    for (int c = 0; c < nc; ++c) {
        set_role(c, 0, 1);
        set_role(c, 2, 0);
    }
    auto propagate = [&] {
        while (!work.empty()) {
            auto [c, s] = work.front();
            work.pop();
            int r = role[std::size_t(c)][std::size_t(s)];
            if (s == 1 || s == 3) set_role(c, s ^ 2, 1 - r);
            int e = edge_index_[crossings_[std::size_t(c)].e[std::size_t(s)]];
            auto [o1, o2] = std::pair{occ_[std::size_t(e)][0], occ_[std::size_t(e)][1]};
            auto other = (o1 == std::pair{c, s}) ? o2 : o1;
            set_role(other.first, other.second, 1 - r);
        }
    };
    propagate();
    // Components never forced by an under-pass (rare: a component lying over
    // everything) get a deterministic orientation from their smallest edge.
    for (int e = 0; e < ne; ++e) {
        auto [c, s] = occ_[std::size_t(e)][0];
        if (role[std::size_t(c)][std::size_t(s)] == -1) {
            set_role(c, s, 0);
            propagate();
        }
    }

    tail_.assign(std::size_t(ne), {-1, -1});
    head_.assign(std::size_t(ne), {-1, -1});
    for (int e = 0; e < ne; ++e) {
        for (auto [c, s] : occ_[std::size_t(e)]) {
            if (role[std::size_t(c)][std::size_t(s)] == 0) {
                if (tail_[std::size_t(e)].first != -1) throw InputError("diagram: edge with two tails");
                tail_[std::size_t(e)] = {c, s};
            } else {
                if (head_[std::size_t(e)].first != -1) throw InputError("diagram: edge with two heads");
                head_[std::size_t(e)] = {c, s};
            }
        }
        if (tail_[std::size_t(e)].first < 0 || head_[std::size_t(e)].first < 0)
            throw InputError("diagram: inconsistent orientations");
    }

    sign_.assign(std::size_t(nc), 0);
    over_in_slot_.assign(std::size_t(nc), 0);
    for (int c = 0; c < nc; ++c) {
        int s = role[std::size_t(c)][1] == 1 ? 1 : 3;
        over_in_slot_[std::size_t(c)] = s;
        sign_[std::size_t(c)] = (s == 3) ? 1 : -1;
    }

    // Connectivity (face tracing and the Euler test assume one diagram).
    UnionFind uf(nc);
    for (int e = 0; e < ne; ++e) uf.unite(occ_[std::size_t(e)][0].first, occ_[std::size_t(e)][1].first);
    for (int c = 1; c < nc; ++c)
        if (uf.find(c) != uf.find(0))
            throw InputError("diagram: not connected (split diagrams are not supported)");

    // Components: follow the strand through each crossing.
    auto strand_next = [&](int e) {
        auto [c, s] = head_[std::size_t(e)];
        int out_slot = (s == 0) ? 2 : (s ^ 2);
        return edge_index_[crossings_[std::size_t(c)].e[std::size_t(out_slot)]];
    };
    component_of_edge_.assign(std::size_t(ne), -1);
    component_count_ = 0;
    for (int e0 = 0; e0 < ne; ++e0) {
        if (component_of_edge_[std::size_t(e0)] != -1) continue;
        int id = component_count_++;
        int e = e0;
        do {
            component_of_edge_[std::size_t(e)] = id;
            e = strand_next(e);
        } while (e != e0);
    }

    // Arcs: cut the strand at each under-pass.
    arc_of_edge_.assign(std::size_t(ne), -1);
    std::vector<std::vector<int>> raw_arcs;
    auto walk_arc = [&](int start) {
        std::vector<int> edges;
        int e = start;
        for (;;) {
            edges.push_back(e);
            arc_of_edge_[std::size_t(e)] = -2;  // visited marker
            auto [c, s] = head_[std::size_t(e)];
            if (s == 0) break;  // dives under
            e = strand_next(e);
            if (e == start) break;  // all-over component
        }
        raw_arcs.push_back(std::move(edges));
    };
    for (int c = 0; c < nc; ++c) walk_arc(edge_index_[crossings_[std::size_t(c)].e[2]]);
    for (int e = 0; e < ne; ++e)
        if (arc_of_edge_[std::size_t(e)] == -1) walk_arc(e);  // all-over components

    std::sort(raw_arcs.begin(), raw_arcs.end(), [&](const std::vector<int>& a, const std::vector<int>& b) {
        i64 la = edge_labels_[std::size_t(*std::min_element(a.begin(), a.end()))];
        i64 lb = edge_labels_[std::size_t(*std::min_element(b.begin(), b.end()))];
        return la < lb;
    });
    arcs_ = std::move(raw_arcs);
    for (int a = 0; a < int(arcs_.size()); ++a)
        for (int e : arcs_[std::size_t(a)]) arc_of_edge_[std::size_t(e)] = a;

    for (int c = 0; c < nc; ++c)
        if (arc_of_edge_[std::size_t(edge_at(c, 1))] != arc_of_edge_[std::size_t(edge_at(c, 3))])
            throw ComputeError("diagram: over-strand split across arcs");

    // Face tracing.  A dart is an oriented edge-side; walking keeps its face
    // on the travel-left, so the next dart leaves the arrival crossing by the
    // clockwise-adjacent slot.
    auto dart_id = [&](int e, bool fwd) { return e * 2 + (fwd ? 0 : 1); };
    auto next_dart = [&](int e, bool fwd) {
        auto [c, s] = fwd ? head_[std::size_t(e)] : tail_[std::size_t(e)];
        int s2 = (s + 3) % 4;
        int e2 = edge_index_[crossings_[std::size_t(c)].e[std::size_t(s2)]];
        bool fwd2 = tail_[std::size_t(e2)] == std::pair{c, s2};
        return std::pair{e2, fwd2};
    };
    face_of_dart_.assign(std::size_t(ne) * 2, -1);
    std::vector<std::vector<FaceDart>> raw_faces;
    for (int e = 0; e < ne; ++e)
        for (bool fwd : {true, false}) {
            if (face_of_dart_[std::size_t(dart_id(e, fwd))] != -1) continue;
            int f = int(raw_faces.size());
            std::vector<FaceDart> boundary;
            int ce = e;
            bool cf = fwd;
            do {
                face_of_dart_[std::size_t(dart_id(ce, cf))] = f;
                boundary.push_back(FaceDart{ce, cf ? Side::left : Side::right});
                std::tie(ce, cf) = next_dart(ce, cf);
            } while (!(ce == e && cf == fwd));
            raw_faces.push_back(std::move(boundary));
        }

    // Canonical face order: by smallest (edge label, side) on the boundary.
    std::vector<int> order(raw_faces.size());
    std::iota(order.begin(), order.end(), 0);
    auto face_key = [&](int f) {
        std::pair<i64, int> best{INT64_MAX, 2};
        for (const FaceDart& d : raw_faces[std::size_t(f)])
            best = std::min(best, {edge_labels_[std::size_t(d.edge)], d.side == Side::left ? 0 : 1});
        return best;
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return face_key(a) < face_key(b); });
    std::vector<int> renumber(raw_faces.size());
    faces_.resize(raw_faces.size());
    for (int i = 0; i < int(order.size()); ++i) {
        renumber[std::size_t(order[std::size_t(i)])] = i;
        faces_[std::size_t(i)] = std::move(raw_faces[std::size_t(order[std::size_t(i)])]);
    }
    for (int& f : face_of_dart_) f = renumber[std::size_t(f)];

    quadrant_face_.assign(std::size_t(nc), {0, 0, 0, 0});
    for (int c = 0; c < nc; ++c)
        for (int q = 0; q < 4; ++q) {
            int e = edge_index_[crossings_[std::size_t(c)].e[std::size_t(q)]];
            bool fwd = tail_[std::size_t(e)] == std::pair{c, q};
            quadrant_face_[std::size_t(c)][std::size_t(q)] = face_of_dart_[std::size_t(dart_id(e, fwd))];
        }

    if (nc - ne + int(faces_.size()) != 2)
        throw InputError("diagram: face tracing fails the Euler test (not a planar rotation system)");

    unbounded_face_ = face_left(0);  // edge 0 has the smallest label
}

int LinkDiagram::writhe() const {
    int w = 0;
    for (int s : sign_) w += s;
    return w;
}

int LinkDiagram::component_of_arc(int a) const {
    if (unknot0_) return 0;
    return component_of_edge_[std::size_t(arcs_[std::size_t(a)][0])];
}

WirtingerPresentation LinkDiagram::wirtinger() const {
    WirtingerPresentation p;
    p.generators = arc_count();
    for (int c = 0; c < crossing_count(); ++c)
        p.relations.push_back({c, under_in_arc(c), over_arc(c), under_out_arc(c), sign(c)});
    return p;
}

LinkDiagram LinkDiagram::mirrored() const {
    std::vector<PDCrossing> out;
    for (int c = 0; c < crossing_count(); ++c) {
        const auto& t = crossings_[std::size_t(c)].e;
        // New under-in is the old over-in; counterclockwise order is kept.
        if (over_in_slot(c) == 1)
            out.push_back(PDCrossing{{t[1], t[2], t[3], t[0]}});
        else
            out.push_back(PDCrossing{{t[3], t[0], t[1], t[2]}});
    }
    return from_crossings(std::move(out));
}

LinkDiagram LinkDiagram::reversed() const {
    std::vector<PDCrossing> out;
    for (const PDCrossing& x : crossings_) out.push_back(PDCrossing{{x.e[2], x.e[3], x.e[0], x.e[1]}});
    return from_crossings(std::move(out));
}

std::string LinkDiagram::pd_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
        if (i) os << " ";
        const auto& t = crossings_[i].e;
        os << "X(" << t[0] << "," << t[1] << "," << t[2] << "," << t[3] << ")";
    }
    return os.str();
}

LinkDiagram LinkDiagram::canonically_relabeled() const {
    // Walk each component from its smallest edge, numbering consecutively.
    std::map<i64, i64> relabel;
    i64 next = 1;
    auto strand_next = [&](int e) {
        auto [c, s] = head_[std::size_t(e)];
        int out_slot = (s == 0) ? 2 : (s ^ 2);
        return edge_index_.at(crossings_[std::size_t(c)].e[std::size_t(out_slot)]);
    };
    for (int e0 = 0; e0 < edge_count(); ++e0) {
        if (relabel.count(edge_label(e0))) continue;
        int e = e0;
        do {
            relabel[edge_label(e)] = next++;
            e = strand_next(e);
        } while (e != e0);
    }
    std::vector<PDCrossing> out;
    for (const PDCrossing& x : crossings_) {
        PDCrossing y;
        for (int s = 0; s < 4; ++s) y.e[std::size_t(s)] = relabel.at(x.e[std::size_t(s)]);
        out.push_back(y);
    }
    std::sort(out.begin(), out.end(), [](const PDCrossing& a, const PDCrossing& b) { return a.e < b.e; });
    return from_crossings(std::move(out));
}

bool pd_isomorphic(const LinkDiagram& a, const LinkDiagram& b) {
    if (a.is_zero_crossing_unknot() || b.is_zero_crossing_unknot())
        return a.is_zero_crossing_unknot() == b.is_zero_crossing_unknot();
    if (a.crossing_count() != b.crossing_count() || a.edge_count() != b.edge_count()) return false;
    const int nc = a.crossing_count();
    // Fixing the image of one crossing forces the whole edge bijection on a
    // connected diagram; try every image for crossing 0.
    for (int img = 0; img < nc; ++img) {
        std::map<i64, i64> emap;
        std::vector<int> cmap(std::size_t(nc), -1);
        std::vector<bool> used(std::size_t(nc), false);
        bool ok = true;
        std::queue<int> work;
        auto match = [&](int ca, int cb) {
            if (cmap[std::size_t(ca)] != -1) return cmap[std::size_t(ca)] == cb;
            if (used[std::size_t(cb)]) return false;
            for (int s = 0; s < 4; ++s) {
                i64 ea = a.crossing(ca).e[std::size_t(s)];
                i64 eb = b.crossing(cb).e[std::size_t(s)];
                auto it = emap.find(ea);
                if (it != emap.end() && it->second != eb) return false;
            }
            for (int s = 0; s < 4; ++s) emap[a.crossing(ca).e[std::size_t(s)]] = b.crossing(cb).e[std::size_t(s)];
            cmap[std::size_t(ca)] = cb;
            used[std::size_t(cb)] = true;
            work.push(ca);
            return true;
        };
        if (!match(0, img)) continue;
        while (ok && !work.empty()) {
            int ca = work.front();
            work.pop();
            for (int s = 0; s < 4 && ok; ++s) {
                int ea = a.edge_index(a.crossing(ca).e[std::size_t(s)]);
                int eb = b.edge_index(emap.at(a.crossing(ca).e[std::size_t(s)]));
                // Pair up the two endpoints of corresponding edges.
                for (auto [enda, endb] :
                     {std::pair{a.edge_tail(ea), b.edge_tail(eb)}, std::pair{a.edge_head(ea), b.edge_head(eb)}}) {
                    if (enda.second != endb.second || !match(enda.first, endb.first)) {
                        ok = false;
                        break;
                    }
                }
            }
        }
        if (ok && int(emap.size()) == a.edge_count()) return true;
    }
    return false;
}

}  // namespace cupcube
