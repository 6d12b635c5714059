#include <doctest.h>

#include "cupcube/branched.hpp"
#include "cupcube/invariance.hpp"

using namespace cupcube;

namespace {
const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
}

TEST_CASE("r1 insert and inverse are mutually inverse") {
    LinkDiagram d = LinkDiagram::parse(kTrefoil);
    for (int sign : {+1, -1})
        for (bool under_first : {true, false})
            for (int e = 0; e < d.edge_count(); ++e) {
                RMoveSite site{.kind = "r1", .edge = d.edge_label(e), .sign = sign,
                               .under_first = under_first};
                MoveResult m = apply_rmove(d, site);
                CHECK(m.diagram.crossing_count() == 4);
                CHECK(m.diagram.writhe() == d.writhe() + sign);
                MoveResult back = apply_rmove(m.diagram, RMoveSite{.kind = "r1_inv",
                                                                   .crossing = m.patch_crossing});
                CHECK(pd_isomorphic(back.diagram, d));
            }
}

TEST_CASE("r1 inverse on a lone kink yields the bare unknot") {
    LinkDiagram kink = LinkDiagram::parse("X(1,2,2,1)");
    MoveResult m = apply_rmove(kink, RMoveSite{.kind = "r1_inv", .crossing = 0});
    CHECK(m.diagram.is_zero_crossing_unknot());
}

TEST_CASE("r2 insert creates a removable bigon and restores on inverse") {
    for (const char* pd : {kTrefoil, "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"}) {
        LinkDiagram d = LinkDiagram::parse(pd);
        int tried = 0;
        for (int face = 0; face < d.face_count(); ++face) {
            const auto& bd = d.face_boundary(face);
            for (std::size_t i = 0; i < bd.size(); ++i)
                for (std::size_t j = 0; j < bd.size(); ++j) {
                    if (bd[i].edge == bd[j].edge) continue;
                    for (bool over : {true, false}) {
                        RMoveSite site{.kind = "r2", .edge = d.edge_label(bd[i].edge),
                                       .target = d.edge_label(bd[j].edge), .face = face,
                                       .over = over};
                        MoveResult m = apply_rmove(d, site);
                        ++tried;
                        CHECK(m.diagram.crossing_count() == d.crossing_count() + 2);
                        CHECK(m.diagram.writhe() == d.writhe());
                        REQUIRE(m.patch_face >= 0);
                        MoveResult back =
                            apply_rmove(m.diagram, RMoveSite{.kind = "r2_inv", .face = m.patch_face});
                        CHECK(pd_isomorphic(back.diagram, d));
                    }
                }
        }
        CHECK(tried > 10);
    }
}

TEST_CASE("trefoil bigons are not removable (same-strand pattern)") {
    LinkDiagram d = LinkDiagram::parse(kTrefoil);
    CHECK(find_r2_inverse_faces(d).empty());
}

TEST_CASE("r3 preserves writhe and is an involution at the new triangle") {
    for (auto word : {std::vector<int>{2, 1, 2, 1, 1}, std::vector<int>{-2, -1, -2, -1, -1},
                      std::vector<int>{1, 2, 1, 1, 2}}) {
        BraidClosure bc = braid_closure(3, word);
        auto faces = find_r3_faces(bc.diagram);
        REQUIRE(!faces.empty());
        for (int face : faces) {
            MoveResult m = apply_rmove(bc.diagram, RMoveSite{.kind = "r3", .face = face});
            CHECK(m.diagram.crossing_count() == bc.diagram.crossing_count());
            CHECK(m.diagram.writhe() == bc.diagram.writhe());
            REQUIRE(m.patch_face >= 0);
            MoveResult back = apply_rmove(m.diagram, RMoveSite{.kind = "r3", .face = m.patch_face});
            CHECK(pd_isomorphic(back.diagram, bc.diagram));
        }
    }
}

TEST_CASE("r3 rejects the trefoil's cyclic triangle") {
    LinkDiagram d = LinkDiagram::parse(kTrefoil);
    CHECK(find_r3_faces(d).empty());
}

TEST_CASE("coloring transport is a bijection compatible with the move") {
    LinkDiagram d = LinkDiagram::parse(kTrefoil);
    BranchedSetup s = branched_setup(4);
    Representation f = Representation::constant(d, 1);
    ColoringSpace space(d, f, s.module);

    RMoveSite site{.kind = "r2", .edge = 1, .target = 5, .face = d.face_left(d.edge_index(1)),
                   .over = true};
    MoveResult m = apply_rmove(d, site);
    Representation f2 = rep_of_xcoloring(transport_xcoloring(
        d, m.diagram, m, s.module, xcoloring_of(d, f, s.module, Coloring{Vec(std::size_t(12), 0)})));
    ColoringSpace space2(m.diagram, f2, s.module);
    CHECK(space2.count() == space.count());

    std::set<Vec> images;
    space.full().enumerate(1u << 12, [&](const Vec& v) {
        auto moved = transport_xcoloring(d, m.diagram, m, s.module,
                                         xcoloring_of(d, f, s.module, Coloring{v}));
        Coloring c2 = mpart_of_xcoloring(s.module, moved);
        CHECK(space2.is_coloring(c2.m));
        images.insert(c2.m);
    });
    CHECK(u128(images.size()) == space.count());
}

TEST_CASE("invariance harness passes on a sample of moves") {
    LinkDiagram d = LinkDiagram::parse(kTrefoil);
    BranchedSetup s = branched_setup(4);
    Representation f = Representation::constant(d, 1);
    for (RMoveSite site : {RMoveSite{.kind = "r1", .edge = 2, .sign = -1, .under_first = false},
                           RMoveSite{.kind = "r2", .edge = 2, .target = 4,
                                     .face = LinkDiagram::parse(kTrefoil).face_right(
                                         LinkDiagram::parse(kTrefoil).edge_index(2)),
                                     .over = false}}) {
        InvarianceReport r = check_move_invariance(d, f, s.module, s.module, s.module, s.psi, site, 8, 1);
        CHECK(r.ok());
    }
}
