#include <doctest.h>

#include "cupcube/branched.hpp"

using namespace cupcube;

TEST_CASE("p-projection of the coefficient ring") {
    QuotRing a = QuotRing::eisenstein(5);
    CHECK(a.p_project(Vec{2, 3}) == 2);
    CHECK(a.p_project(a.t()) == 0);
    CHECK(a.p_project(a.one()) == 1);
    // projecting a form maps entries coefficientwise
    LinkDiagram d = LinkDiagram::parse(census_lookup("3_1").pd);
    BranchedResult r = branched_form(d, 2, "3_1");
    CubicForm zn = p_project(QuotRing::eisenstein(2), r.form);
    CHECK(zn.codomain.modulus() == 2);
    CHECK(zn.codomain.deg() == 1);
    bool nonzero = !zn.is_zero();
    CHECK(nonzero);
}

TEST_CASE("branched setup invariants") {
    for (i64 n : {2, 3, 4, 5, 9}) {
        BranchedSetup s = branched_setup(n);
        CHECK(s.module.rank() == 2);
        CHECK_NOTHROW(s.psi.check(s.module, s.module, s.module));
        // f = t is always a representation (abelian target)
        LinkDiagram d = LinkDiagram::parse(census_lookup("6_2").pd);
        CHECK(!check_representation(d, Representation::constant(d, 1), s.module.group()));
    }
    CHECK_THROWS_AS(branched_setup(1), InputError);
    CHECK_THROWS_AS(branched_setup(0), InputError);
}

TEST_CASE("reduced colorings are annihilated by 1 + t + t^2") {
    // 1+t+t^2 = 0 in the coefficient ring, so multiplication by it kills
    // every coloring blockwise.
    BranchedSetup s = branched_setup(4);
    LinkDiagram d = LinkDiagram::parse(census_lookup("4_1").pd);
    ColoringSpace space(d, Representation::constant(d, 1), s.module);
    Vec sum = s.ring.add(s.ring.add(s.ring.one(), s.ring.t()), s.ring.mul(s.ring.t(), s.ring.t()));
    CHECK(vec_is_zero(sum));
    IntMat mult = s.ring.mult_matrix(sum);
    for (int i = 0; i < space.reduced().rank(); ++i) {
        const Vec& g = space.reduced().gen(i);
        for (int arc = 0; arc < d.arc_count(); ++arc) {
            Vec blk(g.begin() + arc * 2, g.begin() + (arc + 1) * 2);
            CHECK(vec_is_zero(vec_mat_mul_mod(blk, mult, 4)));
        }
    }
}

TEST_CASE("table rows reproduce (except the documented 5_2 anomaly)") {
    auto rows = table_check();
    int fails = 0;
    for (const TableRow& r : rows) {
        if (r.knot == "5_2") {
            // Published row (1+t)abc is incompatible with the invariant: the
            // engine's form vanishes on the whole coloring module and the
            // triple cup form is alternating over odd moduli.  Documented in
            // the repo notes; asserted here so a change in behaviour is loud.
            CHECK(!r.pass);
            CHECK(r.got == "0");
            ++fails;
        } else {
            CHECK(r.pass);
        }
    }
    CHECK(fails == 1);
    CHECK(rows.size() == 28);
}

TEST_CASE("branched forms of specific rows") {
    {
        BranchedResult r = branched_form(LinkDiagram::parse(census_lookup("3_1").pd), 2, "3_1");
        CHECK(r.rank_one);
        CHECK(r.pretty == "a*b*c");
        CHECK(r.reduced_orders == std::vector<i64>{2, 2});
    }
    {
        BranchedResult r = branched_form(LinkDiagram::parse(census_lookup("4_1").pd), 4, "4_1");
        CHECK(r.pretty == "2*a*b*c");
        CHECK(r.reduced_orders == std::vector<i64>{4, 4});
    }
    {
        BranchedResult r = branched_form(LinkDiagram::parse(census_lookup("5_1").pd), 3, "5_1");
        CHECK(r.form_is_zero());
        CHECK(r.reduced_orders.empty());
    }
    {
        // 6_1 at n=7 has H^1 = A yet a vanishing form: real content, not a
        // trivial-module degeneracy
        BranchedResult r = branched_form(LinkDiagram::parse(census_lookup("6_1").pd), 7, "6_1");
        CHECK(r.form_is_zero());
        CHECK(r.reduced_orders == std::vector<i64>{7, 7});
    }
    CHECK_THROWS_AS(branched_form(LinkDiagram::parse(census_lookup("3_1").pd), 1), InputError);
}

TEST_CASE("diagram independence across the census") {
    for (auto& [name, n] : std::vector<std::pair<std::string, i64>>{
             {"3_1", 2}, {"4_1", 4}, {"5_1", 3}, {"5_2", 5}, {"6_1", 7}, {"6_2", 5}, {"6_3", 7}}) {
        const CensusEntry& e = census_lookup(name);
        LinkDiagram d1 = LinkDiagram::parse(e.pd);
        LinkDiagram d2 = LinkDiagram::parse(e.pd_alt);
        CHECK(!pd_isomorphic(d1, d2));
        BranchedResult r1 = branched_form(d1, n, name);
        BranchedResult r2 = branched_form(d2, n, name);
        CHECK(r1.reduced_orders == r2.reduced_orders);
        QuotRing a = QuotRing::eisenstein(n);
        CHECK(semilinear_canonical(a, r1.lambda) == semilinear_canonical(a, r2.lambda));
        CHECK(r1.form_is_zero() == r2.form_is_zero());
        CHECK(r1.pretty == r2.pretty);
    }
}

TEST_CASE("table check is independent of the thread cap") {
    auto serialize = [] {
        std::string out;
        for (const TableRow& r : table_check())
            out += r.knot + "|" + std::to_string(r.n) + "|" + r.got + "|" + (r.pass ? "1" : "0") + ";";
        return out;
    };
    std::string serial = serialize();
    setenv("CUPCUBE_THREADS", "4", 1);
    std::string threaded = serialize();
    unsetenv("CUPCUBE_THREADS");
    CHECK(serial == threaded);
}
