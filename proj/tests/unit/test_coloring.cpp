#include <doctest.h>

#include "cupcube/branched.hpp"
#include "support.hpp"

using namespace cupcube;
using testsupport::brute_force_colorings;
using testsupport::solver_colorings;

namespace {

XElem random_x(Rng& rng, const GModule& mod) {
    Vec m(std::size_t(mod.rank()));
    for (auto& v : m) v = i64(rng.below(u64(mod.modulus())));
    return XElem{m, int(rng.below(u64(mod.group().order())))};
}

}  // namespace

TEST_CASE("quandle axioms hold for X = M x G") {
    auto s3 = std::make_shared<FiniteGroup>(FiniteGroup::symmetric3());
    std::vector<GModule> mods;
    mods.push_back(branched_setup(2).module);
    mods.push_back(branched_setup(5).module);
    mods.push_back(GModule::from_generator_matrices(
        s3, 3, 3,
        {IntMat{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, IntMat{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}}));

    Rng rng(123);
    for (const GModule& mod : mods) {
        for (int iter = 0; iter < 1200; ++iter) {
            XElem x = random_x(rng, mod), y = random_x(rng, mod), z = random_x(rng, mod);
            // idempotence
            CHECK(quandle_op(mod, x, x) == x);
            // right-invertibility
            CHECK(quandle_op_inv(mod, quandle_op(mod, x, y), y) == x);
            CHECK(quandle_op(mod, quandle_op_inv(mod, x, y), y) == x);
            // self-distributivity
            XElem lhs = quandle_op(mod, quandle_op(mod, x, y), z);
            XElem rhs = quandle_op(mod, quandle_op(mod, x, z), quandle_op(mod, y, z));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("quandle op worked example in Z[t]/(2, t^2+t+1)") {
    BranchedSetup s = branched_setup(2);
    // ((1, t), (t, t)) -> ((1-t)t + t, t) = (1+t, t)
    XElem x{s.ring.one(), 1}, y{s.ring.t(), 1};
    XElem got = quandle_op(s.module, x, y);
    CHECK(got.m == s.ring.add(s.ring.one(), s.ring.t()));
    CHECK(got.g == 1);
    // identity second argument
    XElem e{s.ring.zero(), 0};
    CHECK(quandle_op(s.module, x, e) == x);
}

TEST_CASE("check_representation on the trefoil") {
    LinkDiagram d = LinkDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    FiniteGroup z3 = FiniteGroup::cyclic(3);
    CHECK(!check_representation(d, Representation::constant(d, 1), z3));

    FiniteGroup s3 = FiniteGroup::symmetric3();
    int t12 = *s3.element_by_name("s");
    int c123 = *s3.element_by_name("c");
    int t23 = s3.mul(t12, c123);
    int t13 = s3.mul(c123, t12);
    if (s3.mul(t23, t23) != 0) std::swap(t23, t13);
    REQUIRE(s3.mul(t23, t23) == 0);
    REQUIRE(s3.mul(t13, t13) == 0);
    // all six labelings by the three distinct transpositions color the trefoil
    std::vector<int> trans{t12, t23, t13};
    int valid = 0;
    for (int a : trans)
        for (int b : trans)
            for (int c : trans) {
                if (a == b || b == c || a == c) continue;
                if (!check_representation(d, Representation{{a, b, c}}, s3)) ++valid;
            }
    CHECK(valid == 6);
    // a broken one reports a crossing
    CHECK(check_representation(d, Representation{{t12, t12, t13}}, s3).has_value());
}

TEST_CASE("trefoil branched coloring counts") {
    LinkDiagram d = LinkDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    // n = 2: the constraint (a-b)(1-t+t^2) vanishes mod 2, so Col = M^2
    {
        BranchedSetup s = branched_setup(2);
        ColoringSpace space(d, Representation::constant(d, 1), s.module);
        CHECK(space.count() == 16);
        CHECK(space.reduced_count() == 4);
        CHECK(solver_colorings(space) == brute_force_colorings(d, space.rep(), s.module));
    }
    // n = 3: 1-t+t^2 = t is a unit mod (3, t^2+t+1), so only diagonals color
    {
        BranchedSetup s = branched_setup(3);
        ColoringSpace space(d, Representation::constant(d, 1), s.module);
        CHECK(solver_colorings(space) == brute_force_colorings(d, space.rep(), s.module));
        CHECK(space.count() == 9);
        CHECK(space.reduced_count() == 1);
    }
}

TEST_CASE("coloring solver equals brute force on small setups") {
    auto z3 = std::make_shared<FiniteGroup>(FiniteGroup::cyclic(3));
    auto s3 = std::make_shared<FiniteGroup>(FiniteGroup::symmetric3());

    std::vector<std::pair<LinkDiagram, std::pair<GModule, Representation>>> cases;

    LinkDiagram tre = LinkDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    GModule m2 = branched_setup(2).module;
    cases.push_back({tre, {m2, Representation::constant(tre, 1)}});

    LinkDiagram f8 = LinkDiagram::parse("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)");
    cases.push_back({f8, {m2, Representation::constant(f8, 1)}});

    LinkDiagram kinked = LinkDiagram::parse("X(1,1,2,2)");
    cases.push_back({kinked, {branched_setup(5).module, Representation::constant(kinked, 1)}});

    LinkDiagram hopf = LinkDiagram::parse("X(1,3,2,4) X(3,1,4,2)");
    GModule z9 = GModule::from_generator_matrices(z3, 9, 1, {IntMat{{4}}});
    cases.push_back({hopf, {z9, Representation{{1, 2}}}});

    // S3 trefoil with the permutation module (Z/3)^3
    GModule perm = GModule::from_generator_matrices(
        s3, 3, 3, {IntMat{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, IntMat{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}});
    bool added = false;
    for (int a = 0; a < 6 && !added; ++a)
        for (int b = 0; b < 6 && !added; ++b)
            for (int c = 0; c < 6 && !added; ++c) {
                if (a == b || b == c || a == c) continue;
                Representation f{{a, b, c}};
                if (check_representation(tre, f, *s3)) continue;
                cases.push_back({tre, {perm, f}});
                added = true;
            }
    REQUIRE(added);

    for (auto& [d, mf] : cases) {
        ColoringSpace space(d, mf.second, mf.first);
        auto brute = brute_force_colorings(d, mf.second, mf.first);
        CHECK(solver_colorings(space) == brute);
        CHECK(space.count() == u128(brute.size()));
        CHECK(space.count() == space.reduced_count() * u128(mf.first.size()));
    }
}

TEST_CASE("diagonal split is exact") {
    LinkDiagram d = LinkDiagram::parse("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)");
    BranchedSetup s = branched_setup(4);
    ColoringSpace space(d, Representation::constant(d, 1), s.module);
    space.full().enumerate(1u << 12, [&](const Vec& x) {
        auto [m0, red] = space.split(x);
        CHECK(space.reduced().contains(red));
        Vec back = vec_add_mod(space.diagonal_coloring(m0), red, s.module.modulus());
        CHECK(back == x);
        for (int j = 0; j < s.module.rank(); ++j) CHECK(red[std::size_t(j)] == 0);
    });
    for (const Vec& m0 : s.module.all_vectors(1u << 10))
        CHECK(space.is_coloring(space.diagonal_coloring(m0)));
}

TEST_CASE("zero-crossing unknot has Col = M") {
    LinkDiagram u = LinkDiagram::zero_crossing_unknot();
    BranchedSetup s = branched_setup(3);
    ColoringSpace space(u, Representation::constant(u, 1), s.module);
    CHECK(space.count() == u128(s.module.size()));
    CHECK(space.reduced_count() == 1);
}

TEST_CASE("shadow extension propagates and verifies") {
    BranchedSetup s = branched_setup(2);

    // zero coloring labels every region 0
    LinkDiagram tre = LinkDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    Representation f = Representation::constant(tre, 1);
    ColoringSpace space(tre, f, s.module);
    ShadowColoring zero = shadow_extend(tre, f, s.module, Coloring{Vec(std::size_t(6), 0)});
    for (const Vec& r : zero.region) CHECK(vec_is_zero(r));

    // kink with a diagonal coloring: some region carries a(1 - rho(t))
    LinkDiagram kink = LinkDiagram::parse("X(1,1,2,2)");
    Representation fk = Representation::constant(kink, 1);
    for (const Vec& a : s.module.all_vectors(64)) {
        ShadowColoring sh = shadow_extend(kink, fk, s.module, Coloring{a});
        Vec expect = vec_sub_mod(a, s.module.act(a, 1), s.module.modulus());
        int found = 0;
        for (int face = 0; face < kink.face_count(); ++face)
            if (sh.region[std::size_t(face)] == expect) ++found;
        CHECK(found >= 1);
    }

    // basis colorings extend consistently from any choice of unbounded face
    for (int i = 0; i < space.full().rank(); ++i)
        for (int face = 0; face < tre.face_count(); ++face)
            CHECK_NOTHROW(shadow_extend(tre, f, s.module, Coloring{space.full().gen(i)}, face));
}

TEST_CASE("colorings are closed under M-part addition") {
    LinkDiagram d = LinkDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    BranchedSetup s = branched_setup(2);
    ColoringSpace space(d, Representation::constant(d, 1), s.module);
    std::vector<Vec> all;
    space.full().enumerate(1u << 10, [&](const Vec& v) { all.push_back(v); });
    for (const Vec& x : all)
        for (const Vec& y : all) CHECK(space.is_coloring(vec_add_mod(x, y, s.module.modulus())));
}

TEST_CASE("coloring system has the documented shape") {
    LinkDiagram d = LinkDiagram::parse("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)");
    BranchedSetup s = branched_setup(5);
    IntMat a = coloring_system(d, Representation::constant(d, 1), s.module);
    CHECK(a.rows() == s.module.rank() * d.arc_count());
    CHECK(a.cols() == s.module.rank() * d.crossing_count());
}
