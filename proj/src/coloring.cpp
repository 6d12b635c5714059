#include "cupcube/coloring.hpp"

#include <queue>

namespace cupcube {

XElem quandle_op(const GModule& mod, const XElem& x, const XElem& y) {
    i64 n = mod.modulus();
    Vec m = vec_add_mod(mod.act(vec_sub_mod(x.m, y.m, n), y.g), y.m, n);
    return XElem{std::move(m), mod.group().conj(x.g, y.g)};
}

XElem quandle_op_inv(const GModule& mod, const XElem& x, const XElem& y) {
    i64 n = mod.modulus();
    const FiniteGroup& g = mod.group();
    Vec m = vec_add_mod(mod.act(vec_sub_mod(x.m, y.m, n), g.inv(y.g)), y.m, n);
    return XElem{std::move(m), g.mul(g.mul(y.g, x.g), g.inv(y.g))};
}

std::optional<int> check_representation(const LinkDiagram& d, const Representation& f,
                                        const FiniteGroup& g) {
    if (int(f.arc_to_g.size()) != d.arc_count()) throw InputError("representation: wrong arc count");
    for (int v : f.arc_to_g)
        if (v < 0 || v >= g.order()) throw InputError("representation: element out of range");
    for (int c = 0; c < d.crossing_count(); ++c) {
        int alpha = f.at(d.under_in_arc(c));
        int beta = f.at(d.over_arc(c));
        int gamma = f.at(d.under_out_arc(c));
        int expect = d.sign(c) > 0 ? g.conj(alpha, beta) : g.mul(g.mul(beta, alpha), g.inv(beta));
        if (gamma != expect) return c;
    }
    return std::nullopt;
}

IntMat coloring_system(const LinkDiagram& d, const Representation& f, const GModule& mod) {
    const int r = mod.rank();
    const i64 n = mod.modulus();
    IntMat a(r * d.arc_count(), r * d.crossing_count());
    IntMat id = IntMat::identity(r);
    for (int c = 0; c < d.crossing_count(); ++c) {
        // m_out = m_in rho(h^eps) + m_over (1 - rho(h^eps)), h = f(over arc).
        int h = f.at(d.over_arc(c));
        const IntMat& rho = d.sign(c) > 0 ? mod.rho(h) : mod.rho_inv(h);
        auto add_block = [&](int arc, const IntMat& coeff) {
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) {
                    i64& cell = a(arc * r + i, c * r + j);
                    cell = mod_reduce(cell + coeff(i, j), n);
                }
        };
        add_block(d.under_out_arc(c), id);
        add_block(d.under_in_arc(c), rho.scaled_mod(-1, n));
        add_block(d.over_arc(c), rho.sub_mod(id, n));  // -(I - rho) = rho - I
    }
    return a;
}

ColoringSpace::ColoringSpace(const LinkDiagram& d, Representation f, const GModule& mod)
    : d_(&d), f_(std::move(f)), mod_(&mod) {
    if (!d.is_zero_crossing_unknot()) {
        if (auto bad = check_representation(d, f_, mod.group()))
            throw InputError("representation violated at crossing " + std::to_string(*bad));
    } else if (int(f_.arc_to_g.size()) != 1) {
        throw InputError("representation: wrong arc count");
    }
    const int r = mod.rank();
    const i64 n = mod.modulus();
    system_ = d.is_zero_crossing_unknot() ? IntMat(r, 0) : coloring_system(d, f_, mod);
    full_ = kernel_mod(system_, n);

    // Reduced colorings: additionally kill the M-part of arc 0.
    IntMat aug(system_.rows(), system_.cols() + r);
    for (int i = 0; i < system_.rows(); ++i)
        for (int j = 0; j < system_.cols(); ++j) aug(i, j) = system_(i, j);
    for (int j = 0; j < r; ++j) aug(j, system_.cols() + j) = 1;
    reduced_ = kernel_mod(aug, n);

    for (int j = 0; j < r; ++j) {
        Vec g(std::size_t(system_.rows()), 0);
        for (int arc = 0; arc < d.arc_count(); ++arc) g[std::size_t(arc * r + j)] = 1;
        diag_gens_.push_back(std::move(g));
    }

    if (full_.cardinality() != reduced_.cardinality() * u128(mod.size()))
        throw ComputeError("coloring split violates |Col| = |Col_red| * |M|");
}

bool ColoringSpace::is_coloring(const Vec& m) const {
    if (int(m.size()) != system_.rows()) return false;
    return vec_is_zero(vec_mat_mul_mod(m, system_, mod_->modulus()));
}

Vec ColoringSpace::diagonal_coloring(const Vec& m0) const {
    const int r = mod_->rank();
    Vec x(std::size_t(system_.rows()), 0);
    for (int arc = 0; arc < d_->arc_count(); ++arc)
        for (int j = 0; j < r; ++j) x[std::size_t(arc * r + j)] = mod_reduce(m0[std::size_t(j)], mod_->modulus());
    return x;
}

std::pair<Vec, Vec> ColoringSpace::split(const Vec& x) const {
    const int r = mod_->rank();
    Vec m0(x.begin(), x.begin() + r);
    Vec red = vec_sub_mod(x, diagonal_coloring(m0), mod_->modulus());
    if (!reduced_.contains(red)) throw ComputeError("coloring split: residue not in Col_red");
    return {std::move(m0), std::move(red)};
}

ShadowColoring shadow_extend(const LinkDiagram& d, const Representation& f, const GModule& mod,
                             const Coloring& c, int unbounded_face) {
    const i64 n = mod.modulus();
    if (unbounded_face < 0) unbounded_face = d.unbounded_face();
    if (unbounded_face >= d.face_count()) throw InputError("shadow_extend: no such face");
    if (int(c.m.size()) != mod.rank() * d.arc_count())
        throw InputError("shadow_extend: coloring has the wrong length");

    ShadowColoring s;
    s.c = c;
    s.unbounded = unbounded_face;
    s.region.assign(std::size_t(d.face_count()), Vec());

    if (d.is_zero_crossing_unknot()) {
        // Two faces separated by the single arc; the rule crosses it once.
        Vec b = c.arc_m(d, mod, 0);
        int h = f.at(0);
        s.region[std::size_t(unbounded_face)] = mod.zero();
        int inner = 1 - unbounded_face;
        s.region[std::size_t(inner)] =
            vec_add_mod(mod.act(vec_sub_mod(mod.zero(), b, n), h), b, n);
        return s;
    }

    s.region[std::size_t(unbounded_face)] = mod.zero();
    std::queue<int> work;
    work.push(unbounded_face);
    auto across = [&](int edge, const Vec& right_label) {
        // right -> left of the arc coloured (b, h)
        Vec b = c.arc_m(d, mod, d.arc_of_edge(edge));
        int h = f.at(d.arc_of_edge(edge));
        return vec_add_mod(mod.act(vec_sub_mod(right_label, b, n), h), b, n);
    };
    auto across_inv = [&](int edge, const Vec& left_label) {
        Vec b = c.arc_m(d, mod, d.arc_of_edge(edge));
        int h = f.at(d.arc_of_edge(edge));
        return vec_add_mod(mod.act(vec_sub_mod(left_label, b, n), mod.group().inv(h)), b, n);
    };
    while (!work.empty()) {
        int face = work.front();
        work.pop();
        for (const FaceDart& dart : d.face_boundary(face)) {
            int other = d.face_of(dart.edge, dart.side == Side::left ? Side::right : Side::left);
            Vec label = dart.side == Side::right ? across(dart.edge, s.region[std::size_t(face)])
                                                 : across_inv(dart.edge, s.region[std::size_t(face)]);
            if (s.region[std::size_t(other)].empty()) {
                s.region[std::size_t(other)] = std::move(label);
                work.push(other);
            }
        }
    }
    // Path independence: every edge relation must hold.
    for (int e = 0; e < d.edge_count(); ++e) {
        const Vec& right = s.region[std::size_t(d.face_right(e))];
        const Vec& left = s.region[std::size_t(d.face_left(e))];
        if (right.empty() || left.empty()) throw ComputeError("shadow_extend: unreached region");
        if (across(e, right) != left)
            throw ComputeError("shadow_extend: region labels inconsistent (invalid coloring?)");
    }
    return s;
}

}  // namespace cupcube
