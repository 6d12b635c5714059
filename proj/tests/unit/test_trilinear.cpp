#include <doctest.h>

#include "cupcube/branched.hpp"
#include "cupcube/invariance.hpp"

using namespace cupcube;

namespace {

ShadowColoring shadow_of(const LinkDiagram& d, const Representation& f, const GModule& m,
                         const Vec& coloring, int face = -1) {
    return shadow_extend(d, f, m, Coloring{coloring}, face);
}

}  // namespace

TEST_CASE("psi product form is G-invariant; coordinate projections are not") {
    BranchedSetup s = branched_setup(5);
    CHECK_NOTHROW(s.psi.check(s.module, s.module, s.module));

    // psi(x,y,z) = p(x) p(y) p(z) fails invariance at g = t
    TrilinearPsi proj = TrilinearPsi::tensor(5, 2, 2, 2, {1, 0, 0, 0, 0, 0, 0, 0});
    CHECK_THROWS_AS(proj.check(s.module, s.module, s.module), ComputeError);

    // zero form is fine
    TrilinearPsi zero = TrilinearPsi::tensor(5, 2, 2, 2, std::vector<i64>(8, 0));
    CHECK_NOTHROW(zero.check(s.module, s.module, s.module));

    // permutation-invariant tensor over S3
    auto s3 = std::make_shared<FiniteGroup>(FiniteGroup::symmetric3());
    GModule perm = GModule::from_generator_matrices(
        s3, 3, 3, {IntMat{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, IntMat{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}});
    std::vector<i64> diag(27, 0);
    for (int i = 0; i < 3; ++i) diag[std::size_t((i * 3 + i) * 3 + i)] = 1;
    TrilinearPsi sym = TrilinearPsi::tensor(3, 3, 3, 3, diag);
    CHECK_NOTHROW(sym.check(perm, perm, perm));
}

TEST_CASE("trilinear sum is additive in each slot") {
    LinkDiagram d = LinkDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    BranchedSetup s = branched_setup(4);
    Representation f = Representation::constant(d, 1);
    ColoringSpace space(d, f, s.module);
    const ModuleBasis& full = space.full();
    Rng rng(9);
    auto rand_col = [&] {
        std::vector<i64> coeffs;
        for (int i = 0; i < full.rank(); ++i) coeffs.push_back(i64(rng.below(u64(full.order(i)))));
        return full.element(coeffs);
    };
    for (int iter = 0; iter < 20; ++iter) {
        Vec a = rand_col(), a2 = rand_col(), b = rand_col(), c = rand_col();
        auto S = [&](const Vec& v) { return shadow_of(d, f, s.module, v); };
        Vec lhs = trilinear_sum(d, f, s.module, s.module, s.module,
                                S(vec_add_mod(a, a2, 4)), S(b), S(c), s.psi);
        Vec rhs = s.ring.add(
            trilinear_sum(d, f, s.module, s.module, s.module, S(a), S(b), S(c), s.psi),
            trilinear_sum(d, f, s.module, s.module, s.module, S(a2), S(b), S(c), s.psi));
        CHECK(lhs == rhs);
        Vec lhs2 = trilinear_sum(d, f, s.module, s.module, s.module, S(b), S(c),
                                 S(vec_add_mod(a, a2, 4)), s.psi);
        Vec rhs2 = s.ring.add(
            trilinear_sum(d, f, s.module, s.module, s.module, S(b), S(c), S(a), s.psi),
            trilinear_sum(d, f, s.module, s.module, s.module, S(b), S(c), S(a2), s.psi));
        CHECK(lhs2 == rhs2);
    }
}

TEST_CASE("the state sum does not depend on the unbounded-face choice") {
    for (const char* pd : {"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)",
                           "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"}) {
        LinkDiagram d = LinkDiagram::parse(pd);
        BranchedSetup s = branched_setup(4);
        Representation f = Representation::constant(d, 1);
        ColoringSpace space(d, f, s.module);
        Rng rng(2);
        std::vector<Vec> all;
        space.full().enumerate(1u << 12, [&](const Vec& v) { all.push_back(v); });
        for (int iter = 0; iter < 10; ++iter) {
            const Vec& a = all[rng.below(all.size())];
            const Vec& b = all[rng.below(all.size())];
            const Vec& c = all[rng.below(all.size())];
            Vec ref = trilinear_sum(d, f, s.module, s.module, s.module, shadow_of(d, f, s.module, a, 0),
                                    shadow_of(d, f, s.module, b, 0), shadow_of(d, f, s.module, c, 0),
                                    s.psi);
            for (int face = 1; face < d.face_count(); ++face) {
                Vec v = trilinear_sum(d, f, s.module, s.module, s.module,
                                      shadow_of(d, f, s.module, a, face),
                                      shadow_of(d, f, s.module, b, face),
                                      shadow_of(d, f, s.module, c, face), s.psi);
                CHECK(v == ref);
            }
        }
    }
}

TEST_CASE("diagonal invariant is the cubic diagonal of T") {
    LinkDiagram d = LinkDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    BranchedSetup s = branched_setup(2);
    Representation f = Representation::constant(d, 1);
    ColoringSpace space(d, f, s.module);
    space.full().enumerate(64, [&](const Vec& v) {
        ShadowColoring sh = shadow_of(d, f, s.module, v);
        Vec j = diagonal_invariant(d, f, s.module, sh, s.psi);
        CHECK(j == trilinear_sum(d, f, s.module, s.module, s.module, sh, sh, sh, s.psi));
        // J(mS) = m^3 J(S)
        for (i64 m = 0; m <= 3; ++m) {
            ShadowColoring shm = shadow_of(d, f, s.module, vec_scaled_mod(v, m, 2));
            Vec jm = diagonal_invariant(d, f, s.module, shm, s.psi);
            CHECK(jm == s.ring.mul_int(j, m * m * m));
        }
    });
    ShadowColoring zero = shadow_of(d, f, s.module, Vec(std::size_t(6), 0));
    CHECK(vec_is_zero(diagonal_invariant(d, f, s.module, zero, s.psi)));
}

TEST_CASE("cubic tensor reconstructs the trilinear map") {
    LinkDiagram d = LinkDiagram::parse("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)");
    BranchedSetup s = branched_setup(4);
    Representation f = Representation::constant(d, 1);
    ColoringSpace space(d, f, s.module);
    CubicForm form = cubic_tensor(d, f, s.module, s.module, s.module, s.psi);
    const ModuleBasis& red = space.reduced();
    REQUIRE(form.rank(0) == red.rank());

    Rng rng(4);
    for (int iter = 0; iter < 15; ++iter) {
        std::vector<i64> a, b, c;
        for (int i = 0; i < red.rank(); ++i) {
            a.push_back(i64(rng.below(u64(red.order(i)))));
            b.push_back(i64(rng.below(u64(red.order(i)))));
            c.push_back(i64(rng.below(u64(red.order(i)))));
        }
        Vec direct = trilinear_sum(d, f, s.module, s.module, s.module,
                                   shadow_of(d, f, s.module, red.element(a)),
                                   shadow_of(d, f, s.module, red.element(b)),
                                   shadow_of(d, f, s.module, red.element(c)), s.psi);
        Vec expanded = s.ring.zero();
        for (int i = 0; i < red.rank(); ++i)
            for (int j = 0; j < red.rank(); ++j)
                for (int k = 0; k < red.rank(); ++k)
                    expanded = s.ring.add(
                        expanded, s.ring.mul_int(form.at(i, j, k), a[std::size_t(i)] * b[std::size_t(j)] %
                                                                       16 * c[std::size_t(k)]));
        CHECK(direct == expanded);
    }
}

TEST_CASE("semilinear orbits over Z[t]/(n,t^2+t+1)") {
    QuotRing a = QuotRing::eisenstein(4);
    // units form one orbit containing 1
    CHECK(semilinear_canonical(a, a.one()) == semilinear_canonical(a, a.add(a.one(), a.t())));
    // 2 and 2t share an orbit; 2 and 1 do not
    CHECK(semilinear_canonical(a, a.from_int(2)) == semilinear_canonical(a, a.mul_int(a.t(), 2)));
    CHECK(semilinear_canonical(a, a.from_int(2)) != semilinear_canonical(a, a.one()));
    CHECK(semilinear_canonical(a, a.zero()) == a.zero());
    CHECK(semilinear_orbit_size(a, a.zero()) == 1);

    QuotRing a5 = QuotRing::eisenstein(5);
    CHECK(semilinear_canonical(a5, a5.add(a5.one(), a5.t())) == semilinear_canonical(a5, a5.one()));
}

TEST_CASE("tensor equivalence with budget") {
    BranchedSetup s = branched_setup(2);
    LinkDiagram d1 = LinkDiagram::parse(census_lookup("3_1").pd);
    LinkDiagram d2 = LinkDiagram::parse(census_lookup("3_1").pd_alt);
    Representation f1 = Representation::constant(d1, 1), f2 = Representation::constant(d2, 1);
    CubicForm t1 = cubic_tensor(d1, f1, s.module, s.module, s.module, s.psi);
    CubicForm t2 = cubic_tensor(d2, f2, s.module, s.module, s.module, s.psi);
    CHECK(tensors_equivalent(t1, t2, 1u << 22) == EquivResult::equivalent);
    CHECK(tensors_equivalent(t1, t1, 1u << 22) == EquivResult::equivalent);
    // zero vs nonzero
    CubicForm z = t1;
    for (Vec& v : z.tensor) v = s.ring.zero();
    CHECK(tensors_equivalent(t1, z, 1u << 22) == EquivResult::inequivalent);
}

TEST_CASE("distinct coefficient modules in the three slots") {
    // M1 = M2 = Z[t]/(4, t^2+t+1) with t acting by multiplication, M3 the
    // trivial rank-2 module; psi(x, y, z) = p(x * galois(y)) * z_0 is
    // G-invariant because galois swaps the action t into t^2.
    auto z3 = std::make_shared<FiniteGroup>(FiniteGroup::cyclic(3));
    QuotRing a = QuotRing::eisenstein(4);
    GModule m12 = GModule::quotring_module(z3, a, {a.t()});
    GModule m3 = GModule::trivial(z3, 4, 2);

    std::vector<i64> coeffs;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                Vec ei = a.zero(), ej = a.zero();
                ei[std::size_t(i)] = 1;
                ej[std::size_t(j)] = 1;
                coeffs.push_back(k == 0 ? a.p_project(a.mul(ei, a.galois(ej))) : 0);
            }
    TrilinearPsi psi = TrilinearPsi::tensor(4, 2, 2, 2, coeffs);
    CHECK_NOTHROW(psi.check(m12, m12, m3));

    LinkDiagram d = LinkDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    Representation f = Representation::constant(d, 1);
    CubicForm form = cubic_tensor(d, f, m12, m12, m3, psi);
    CHECK(form.rank(0) == 2);
    CHECK(form.rank(2) == int(ColoringSpace(d, f, m3).reduced().rank()));

    // invariance through moves holds slot-wise with the mixed modules
    for (RMoveSite site : {RMoveSite{.kind = "r1", .edge = 1, .sign = -1},
                           RMoveSite{.kind = "r2", .edge = 1, .target = 5,
                                     .face = d.face_left(d.edge_index(1)), .over = false}}) {
        InvarianceReport r = check_move_invariance(d, f, m12, m12, m3, psi, site, 12, 3);
        CHECK(r.ok());
        CHECK(r.checked > 0);
    }
}
