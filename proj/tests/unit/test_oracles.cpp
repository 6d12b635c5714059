#include <doctest.h>

#include "cupcube/branched.hpp"
#include "cupcube/oracles.hpp"

using namespace cupcube;

TEST_CASE("trefoil closed form agrees with the crossing sum") {
    // branched n=2: exhaustive (|Col| = 16, 4096 triples)
    {
        BranchedSetup s = branched_setup(2);
        Representation f = Representation::constant(right_trefoil().d, 1);
        OracleReport r = check_trefoil_oracle(s.module, s.psi, f, 1u << 14, 0);
        CHECK(r.exhaustive);
        CHECK(r.checked == 4096);
        CHECK(r.mismatches == 0);
    }
    // branched n=5 sampled
    {
        BranchedSetup s = branched_setup(5);
        Representation f = Representation::constant(right_trefoil().d, 1);
        OracleReport r = check_trefoil_oracle(s.module, s.psi, f, 1500, 0);
        CHECK(r.checked >= 1500);
        CHECK(r.mismatches == 0);
    }
    // nonabelian: S3 coloring with the permutation module
    {
        auto s3 = std::make_shared<FiniteGroup>(FiniteGroup::symmetric3());
        GModule perm = GModule::from_generator_matrices(
            s3, 3, 3,
            {IntMat{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, IntMat{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}});
        std::vector<i64> diag(27, 0);
        for (int i = 0; i < 3; ++i) diag[std::size_t((i * 3 + i) * 3 + i)] = 1;
        TrilinearPsi psi = TrilinearPsi::tensor(3, 3, 3, 3, diag);
        psi.check(perm, perm, perm);

        TrefoilDiagram t = right_trefoil();
        Representation f;
        bool found = false;
        for (int a = 1; a < 6 && !found; ++a)
            for (int b = 1; b < 6 && !found; ++b)
                for (int c = 1; c < 6 && !found; ++c) {
                    if (a == b || b == c || a == c) continue;
                    Representation cand{{0, 0, 0}};
                    cand.arc_to_g[std::size_t(t.alpha)] = a;
                    cand.arc_to_g[std::size_t(t.beta)] = b;
                    cand.arc_to_g[std::size_t(t.gamma)] = c;
                    if (check_representation(t.d, cand, *s3)) continue;
                    f = cand;
                    found = true;
                }
        REQUIRE(found);
        OracleReport r = check_trefoil_oracle(perm, psi, f, 2000, 0);
        CHECK(r.checked >= 2000);
        CHECK(r.mismatches == 0);
    }
}

TEST_CASE("trefoil oracle rejects invalid inputs") {
    BranchedSetup s = branched_setup(3);
    // (a-b)(1-t+t^2) = 0 fails mod 3 whenever a != b
    CHECK_THROWS_AS(oracle_trefoil(s.module, s.module, s.module, s.psi, 1, 1,
                                   {s.ring.one(), s.ring.zero(), s.ring.zero()},
                                   {s.ring.zero(), s.ring.zero(), s.ring.zero()}),
                    InputError);
}

TEST_CASE("figure-eight closed form agrees with the crossing sum") {
    {
        BranchedSetup s = branched_setup(2);
        OracleReport r = check_fig8_oracle(s.module, s.psi, 1, 1u << 14, 0);
        CHECK(r.exhaustive);
        CHECK(r.checked == 4096);
        CHECK(r.mismatches == 0);
    }
    {
        BranchedSetup s = branched_setup(4);
        OracleReport r = check_fig8_oracle(s.module, s.psi, 1, 1200, 0);
        CHECK(r.mismatches == 0);
    }
}

TEST_CASE("torus link closed form agrees with the crossing sum") {
    auto z3 = std::make_shared<FiniteGroup>(FiniteGroup::cyclic(3));
    GModule z9 = GModule::from_generator_matrices(z3, 9, 1, {IntMat{{4}}});
    TrilinearPsi psi9 = TrilinearPsi::tensor(9, 1, 1, 1, {1});
    psi9.check(z9, z9, z9);
    for (int za = 0; za < 3; ++za)
        for (int zb = 0; zb < 3; ++zb) {
            OracleReport r = check_torus_oracle(2, z9, psi9, {za, zb}, 1u << 21, 0);
            CHECK(r.exhaustive);
            CHECK(r.mismatches == 0);
        }
    BranchedSetup s2 = branched_setup(2);
    OracleReport r33 = check_torus_oracle(3, s2.module, psi9.is_product() ? s2.psi : s2.psi, {1, 1, 1},
                                          1200, 0);
    CHECK(r33.mismatches == 0);
}

TEST_CASE("colorings of T(m,m) are exactly ker Gamma") {
    BranchedSetup s = branched_setup(3);
    for (int m : {2, 3}) {
        BraidClosure torus = torus_mm(m);
        Representation f = Representation::constant(torus.diagram, 1);
        ColoringSpace space(torus.diagram, f, s.module);
        IntMat gamma = torus_gamma(m, s.module, std::vector<int>(std::size_t(m), 1));
        CHECK(kernel_mod(gamma, 3).cardinality() == space.count());
    }
}

TEST_CASE("torus oracle rejects non-kernel colours") {
    auto z3 = std::make_shared<FiniteGroup>(FiniteGroup::cyclic(3));
    GModule z9 = GModule::from_generator_matrices(z3, 9, 1, {IntMat{{4}}});
    TrilinearPsi psi9 = TrilinearPsi::tensor(9, 1, 1, 1, {1});
    std::vector<Vec> bad{{Vec{1}}, {Vec{2}}};
    CHECK_THROWS_AS(oracle_torus_mm(2, z9, z9, z9, psi9, {1, 1}, bad, bad, bad), InputError);
}
