#pragma once

#include <set>

#include "cupcube/coloring.hpp"

// Test-side oracles, independent of the SNF solver path: enumerate all arc
// assignments and keep those satisfying the crossing relations directly.
namespace cupcube::testsupport {

inline std::set<Vec> brute_force_colorings(const LinkDiagram& d, const Representation& f,
                                           const GModule& mod, u64 budget = 1u << 21) {
    const int rank = mod.rank();
    const i64 n = mod.modulus();
    u128 total = 1;
    for (int i = 0; i < d.arc_count() * rank; ++i) {
        total *= u128(n);
        if (total > u128(budget)) throw ComputeError("brute force budget exceeded");
    }
    std::set<Vec> out;
    Vec m(std::size_t(d.arc_count() * rank), 0);
    auto ok = [&] {
        for (int c = 0; c < d.crossing_count(); ++c) {
            auto arc_x = [&](int a) {
                return XElem{Vec(m.begin() + a * rank, m.begin() + (a + 1) * rank), f.at(a)};
            };
            XElem in = arc_x(d.under_in_arc(c)), over = arc_x(d.over_arc(c)),
                  outx = arc_x(d.under_out_arc(c));
            XElem expect = d.sign(c) > 0 ? quandle_op(mod, in, over) : quandle_op_inv(mod, in, over);
            if (!(expect == outx)) return false;
        }
        return true;
    };
    for (;;) {
        if (ok()) out.insert(m);
        std::size_t i = 0;
        while (i < m.size()) {
            if (++m[i] < n) break;
            m[i] = 0;
            ++i;
        }
        if (i == m.size()) break;
    }
    return out;
}

inline std::set<Vec> solver_colorings(const ColoringSpace& space, u64 budget = 1u << 21) {
    std::set<Vec> out;
    space.full().enumerate(budget, [&](const Vec& v) { out.insert(v); });
    return out;
}

}  // namespace cupcube::testsupport
