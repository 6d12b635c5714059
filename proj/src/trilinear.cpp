#include "cupcube/trilinear.hpp"

#include <algorithm>

namespace cupcube {

TrilinearPsi TrilinearPsi::product(const QuotRing& a) { return TrilinearPsi(a, true); }

TrilinearPsi TrilinearPsi::tensor(i64 n, int d1, int d2, int d3, std::vector<i64> coeffs) {
    if (int(coeffs.size()) != d1 * d2 * d3) throw InputError("psi tensor: wrong coefficient count");
    TrilinearPsi p(QuotRing::zn(n), false);
    p.d1_ = d1;
    p.d2_ = d2;
    p.d3_ = d3;
    p.coeffs_ = std::move(coeffs);
    for (i64& c : p.coeffs_) c = mod_reduce(c, n);
    return p;
}

Vec TrilinearPsi::eval(const Vec& x, const Vec& y, const Vec& z) const {
    if (product_) return codomain_.mul(codomain_.mul(x, y), z);
    if (int(x.size()) != d1_ || int(y.size()) != d2_ || int(z.size()) != d3_)
        throw InputError("psi: argument rank mismatch");
    i64 n = codomain_.modulus();
    i64 acc = 0;
    for (int i = 0; i < d1_; ++i) {
        if (x[std::size_t(i)] == 0) continue;
        for (int j = 0; j < d2_; ++j) {
            if (y[std::size_t(j)] == 0) continue;
            i64 xy = mod_mul(x[std::size_t(i)], y[std::size_t(j)], n);
            for (int k = 0; k < d3_; ++k) {
                i64 c = coeffs_[std::size_t((i * d2_ + j) * d3_ + k)];
                if (c == 0 || z[std::size_t(k)] == 0) continue;
                acc = mod_reduce(acc + mod_mul(mod_mul(xy, z[std::size_t(k)], n), c, n), n);
            }
        }
    }
    return Vec{acc};
}

void TrilinearPsi::check(const GModule& m1, const GModule& m2, const GModule& m3) const {
    if (&m1.group() != &m2.group() || &m1.group() != &m3.group())
        throw InputError("psi: modules over different groups");
    if (m1.modulus() != m2.modulus() || m1.modulus() != m3.modulus())
        throw InputError("psi: modules over different moduli");
    if (product_) {
        for (const GModule* m : {&m1, &m2, &m3})
            if (!m->ring() || !(*m->ring() == codomain_))
                throw InputError("psi product form needs quotient-ring modules over the codomain ring");
    }
    const i64 n = m1.modulus();
    auto basis = [&](const GModule& m, int i) {
        Vec v = m.zero();
        v[std::size_t(i)] = 1;
        return v;
    };
    // Additivity in each slot on basis pairs.
    for (int i = 0; i < m1.rank(); ++i)
        for (int j = 0; j < m2.rank(); ++j)
            for (int k = 0; k < m3.rank(); ++k) {
                Vec x = basis(m1, i), y = basis(m2, j), z = basis(m3, k);
                Vec two_x = vec_add_mod(x, x, n);
                Vec lhs = eval(two_x, y, z);
                Vec rhs = codomain_.add(eval(x, y, z), eval(x, y, z));
                if (lhs != rhs) throw ComputeError("psi: not additive in slot 1");
            }
    // G-invariance over every group element, exhaustively on basis triples.
    const FiniteGroup& g = m1.group();
    for (int e = 0; e < g.order(); ++e)
        for (int i = 0; i < m1.rank(); ++i)
            for (int j = 0; j < m2.rank(); ++j)
                for (int k = 0; k < m3.rank(); ++k) {
                    Vec x = basis(m1, i), y = basis(m2, j), z = basis(m3, k);
                    Vec lhs = eval(m1.act(x, e), m2.act(y, e), m3.act(z, e));
                    if (lhs != eval(x, y, z))
                        throw ComputeError("psi: G-invariance fails at g=" + g.name(e));
                }
}

namespace {

// slot-1 factor: (A - B) * (1 - rho^exp)
Vec slot_one(const GModule& m, const Vec& region, const Vec& b_arc, int g, int exp) {
    i64 n = m.modulus();
    Vec diff = vec_sub_mod(region, b_arc, n);
    Vec acted = exp > 0 ? m.act(diff, g) : vec_mat_mul_mod(diff, m.rho_inv(g), n);
    return vec_sub_mod(diff, acted, n);
}

// slot-3 factor: C * (1 - rho^exp)
Vec slot_three(const GModule& m, const Vec& c_arc, int h, int exp) {
    i64 n = m.modulus();
    Vec acted = exp > 0 ? m.act(c_arc, h) : vec_mat_mul_mod(c_arc, m.rho_inv(h), n);
    return vec_sub_mod(c_arc, acted, n);
}

}  // namespace

Vec weight(const LinkDiagram& d, const Representation& f, const GModule& m1, const GModule& m2,
           const GModule& m3, const ShadowColoring& s1, const ShadowColoring& s2,
           const ShadowColoring& s3, const TrilinearPsi& psi, int c, const WeightConvention& conv) {
    const int eps = d.sign(c);
    int b_arc, quadrant, exp1, exp3;
    bool negate;
    if (eps > 0) {
        b_arc = d.under_in_arc(c);
        quadrant = 0;
        exp1 = 1;
        exp3 = -1;
        negate = false;
    } else {
        b_arc = conv.neg_b_under_out ? d.under_out_arc(c) : d.under_in_arc(c);
        quadrant = conv.neg_quadrant;
        exp1 = conv.neg_slot1_exp;
        exp3 = conv.neg_slot3_exp;
        negate = conv.neg_negate;
    }
    const int c_arc = d.over_arc(c);
    const int g = f.at(b_arc), h = f.at(c_arc);
    const int region = d.quadrant_face(c, quadrant);

    Vec x = slot_one(m1, s1.region[std::size_t(region)], s1.c.arc_m(d, m1, b_arc), g, exp1);
    Vec y = vec_sub_mod(s2.c.arc_m(d, m2, b_arc), s2.c.arc_m(d, m2, c_arc), m2.modulus());
    Vec z = slot_three(m3, s3.c.arc_m(d, m3, c_arc), h, exp3);
    Vec value = psi.eval(x, y, z);
    return negate ? psi.codomain().neg(value) : value;
}

Vec trilinear_sum(const LinkDiagram& d, const Representation& f, const GModule& m1,
                  const GModule& m2, const GModule& m3, const ShadowColoring& s1,
                  const ShadowColoring& s2, const ShadowColoring& s3, const TrilinearPsi& psi,
                  const WeightConvention& conv) {
    Vec acc = psi.codomain().zero();
    if (d.is_zero_crossing_unknot()) return acc;
    for (int c = 0; c < d.crossing_count(); ++c)
        acc = psi.codomain().add(acc, weight(d, f, m1, m2, m3, s1, s2, s3, psi, c, conv));
    return acc;
}

Vec diagonal_invariant(const LinkDiagram& d, const Representation& f, const GModule& m,
                       const ShadowColoring& s, const TrilinearPsi& psi,
                       const WeightConvention& conv) {
    return trilinear_sum(d, f, m, m, m, s, s, s, psi, conv);
}

CubicForm cubic_tensor(const LinkDiagram& d, const Representation& f, const GModule& m1,
                       const GModule& m2, const GModule& m3, const TrilinearPsi& psi,
                       int unbounded_face, const WeightConvention& conv) {
    std::array<const GModule*, 3> mods{&m1, &m2, &m3};
    std::array<std::vector<ShadowColoring>, 3> shadows;
    CubicForm form;
    form.codomain = psi.codomain();
    for (int s = 0; s < 3; ++s) {
        ColoringSpace space(d, f, *mods[std::size_t(s)]);
        const ModuleBasis& red = space.reduced();
        form.orders[std::size_t(s)] = red.orders();
        for (int i = 0; i < red.rank(); ++i)
            shadows[std::size_t(s)].push_back(
                shadow_extend(d, f, *mods[std::size_t(s)], Coloring{red.gen(i)}, unbounded_face));
    }
    const int r1 = form.rank(0), r2 = form.rank(1), r3 = form.rank(2);
    form.tensor.assign(std::size_t(r1) * r2 * r3, psi.codomain().zero());
    parallel_for(std::size_t(r1) * r2 * r3, [&](std::size_t idx) {
        int k = int(idx % r3), j = int((idx / r3) % r2), i = int(idx / (std::size_t(r2) * r3));
        form.tensor[idx] = trilinear_sum(d, f, m1, m2, m3, shadows[0][std::size_t(i)],
                                         shadows[1][std::size_t(j)], shadows[2][std::size_t(k)], psi, conv);
    });
    return form;
}

Vec semilinear_canonical(const QuotRing& a, const Vec& lambda) {
    Vec best = a.add(lambda, a.zero());  // reduced copy
    bool eisenstein = a.poly() == Vec{1, 1, 1};
    for (const Vec& u : a.units()) {
        best = std::min(best, a.mul(lambda, u));
        if (eisenstein) best = std::min(best, a.mul(a.galois(lambda), u));
    }
    return best;
}

std::size_t semilinear_orbit_size(const QuotRing& a, const Vec& lambda) {
    std::vector<Vec> orbit;
    bool eisenstein = a.poly() == Vec{1, 1, 1};
    for (const Vec& u : a.units()) {
        orbit.push_back(a.mul(lambda, u));
        if (eisenstein) orbit.push_back(a.mul(a.galois(lambda), u));
    }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit.size();
}

namespace {

// All automorphisms of the abelian group with cyclic factor orders `orders`
// (entries of matrix row i taken mod orders[j]); brute force, budget-capped.
std::vector<std::vector<std::vector<i64>>> module_automorphisms(const std::vector<i64>& orders,
                                                                u64 budget, bool& exceeded) {
    const int r = int(orders.size());
    std::vector<std::vector<std::vector<i64>>> out;
    if (r == 0) {
        out.push_back({});
        return out;
    }
    u128 total = 1;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) total *= u128(orders[std::size_t(j)]);
    if (total > u128(budget)) {
        exceeded = true;
        return out;
    }
    std::vector<std::vector<i64>> mat(std::size_t(r), std::vector<i64>(std::size_t(r), 0));
    std::vector<i64> flat(std::size_t(r) * r, 0);
    auto order_of_image = [&](int i) {
        // additive order of sum_j mat[i][j] gen_j where gen_j has order orders[j]
        i64 o = 1;
        for (int j = 0; j < r; ++j) {
            i64 c = mat[std::size_t(i)][std::size_t(j)];
            i64 d = orders[std::size_t(j)] / gcd_i64(c, orders[std::size_t(j)]);
            o = o / gcd_i64(o, d) * d;
        }
        return o;
    };
    // enumerate all matrices, keep bijective order-preserving ones
    std::function<void(int)> rec = [&](int pos) {
        if (pos == r * r) {
            for (int i = 0; i < r; ++i)
                if (order_of_image(i) != orders[std::size_t(i)]) return;
            // bijectivity: images of all tuples distinct
            u128 card = 1;
            for (i64 o : orders) card *= u128(o);
            std::vector<std::vector<i64>> seen;
            std::vector<i64> tup(std::size_t(r), 0);
            for (u128 cnt = 0; cnt < card; ++cnt) {
                std::vector<i64> img(std::size_t(r), 0);
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < r; ++j)
                        img[std::size_t(j)] = mod_reduce(
                            img[std::size_t(j)] + tup[std::size_t(i)] * mat[std::size_t(i)][std::size_t(j)],
                            orders[std::size_t(j)]);
                seen.push_back(img);
                int i = 0;
                while (i < r) {
                    if (++tup[std::size_t(i)] < orders[std::size_t(i)]) break;
                    tup[std::size_t(i)] = 0;
                    ++i;
                }
            }
            std::sort(seen.begin(), seen.end());
            if (std::adjacent_find(seen.begin(), seen.end()) == seen.end()) out.push_back(mat);
            return;
        }
        int i = pos / r, j = pos % r;
        for (i64 v = 0; v < orders[std::size_t(j)]; ++v) {
            mat[std::size_t(i)][std::size_t(j)] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace

EquivResult tensors_equivalent(const CubicForm& a, const CubicForm& b, u64 budget) {
    if (!(a.codomain == b.codomain)) return EquivResult::inequivalent;
    for (int s = 0; s < 3; ++s)
        if (a.orders[std::size_t(s)] != b.orders[std::size_t(s)]) return EquivResult::inequivalent;
    if (a.is_zero() && b.is_zero()) return EquivResult::equivalent;

    bool exceeded = false;
    std::array<std::vector<std::vector<std::vector<i64>>>, 3> autos;
    for (int s = 0; s < 3; ++s) {
        autos[std::size_t(s)] = module_automorphisms(a.orders[std::size_t(s)], budget, exceeded);
        if (exceeded) return EquivResult::budget_exceeded;
    }
    u128 combos = u128(autos[0].size()) * autos[1].size() * autos[2].size();
    if (combos > u128(budget)) return EquivResult::budget_exceeded;

    const QuotRing& cod = a.codomain;
    const int r1 = a.rank(0), r2 = a.rank(1), r3 = a.rank(2);
    auto transform = [&](const std::vector<std::vector<i64>>& p1, const std::vector<std::vector<i64>>& p2,
                         const std::vector<std::vector<i64>>& p3) {
        std::vector<Vec> t(std::size_t(r1) * r2 * r3, cod.zero());
        for (int i = 0; i < r1; ++i)
            for (int j = 0; j < r2; ++j)
                for (int k = 0; k < r3; ++k) {
                    Vec acc = cod.zero();
                    for (int x = 0; x < r1; ++x)
                        for (int y = 0; y < r2; ++y)
                            for (int z = 0; z < r3; ++z) {
                                i64 coef = mod_mul(mod_mul(p1[std::size_t(i)][std::size_t(x)],
                                                           p2[std::size_t(j)][std::size_t(y)], cod.modulus()),
                                                   p3[std::size_t(k)][std::size_t(z)], cod.modulus());
                                acc = cod.add(acc, cod.mul_int(a.at(x, y, z), coef));
                            }
                    t[std::size_t((i * r2 + j) * r3 + k)] = acc;
                }
        return t;
    };
    for (const auto& p1 : autos[0])
        for (const auto& p2 : autos[1])
            for (const auto& p3 : autos[2])
                if (transform(p1, p2, p3) == b.tensor) return EquivResult::equivalent;
    return EquivResult::inequivalent;
}

}  // namespace cupcube
