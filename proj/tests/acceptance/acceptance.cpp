// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <set>

#include "cupcube/branched.hpp"
#include "cupcube/invariance.hpp"

using namespace cupcube;

namespace {

int g_failures = 0;

void report(int criterion, const char* what, bool pass, const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion, what,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++g_failures;
}

GModule s3_perm_module() {
    auto s3 = std::make_shared<FiniteGroup>(FiniteGroup::symmetric3());
    return GModule::from_generator_matrices(
        s3, 3, 3, {IntMat{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, IntMat{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}});
}

TrilinearPsi s3_psi() {
    std::vector<i64> diag(27, 0);
    for (int i = 0; i < 3; ++i) diag[std::size_t((i * 3 + i) * 3 + i)] = 1;
    return TrilinearPsi::tensor(3, 3, 3, 3, diag);
}

Representation s3_trefoil_rep(const LinkDiagram& d, const FiniteGroup& s3) {
    for (int a = 1; a < 6; ++a)
        for (int b = 1; b < 6; ++b)
            for (int c = 1; c < 6; ++c) {
                if (a == b || b == c || a == c) continue;
                Representation f{{a, b, c}};
                if (!check_representation(d, f, s3)) return f;
            }
    throw ComputeError("no S3 trefoil representation found");
}

// ---------------------------------------------------------------- criterion 1
void criterion_table() {
    auto start = std::chrono::steady_clock::now();
    auto rows = table_check();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    int bad = 0;
    for (const TableRow& r : rows) {
        if (!r.pass) {
            ++bad;
            std::printf("       row %s n=%lld: expected %s, computed %s\n", r.knot.c_str(),
                        (long long)r.n, r.expected.c_str(), r.got.c_str());
        }
    }
    char detail[160];
    std::snprintf(detail, sizeof detail, "%zu/%zu rows reproduced in %.2fs", rows.size() - bad,
                  rows.size(), secs);
    bool pass = bad == 0 && secs < 10.0;
    report(1, "published-table reproduction", pass, detail);
    if (bad == 1) {
        std::printf("       note: the (5_2, n=5) entry is not reproducible from the stated\n"
                    "       conventions; the computed form vanishes on the whole coloring\n"
                    "       module and a symmetric nonzero form cannot equal the alternating\n"
                    "       triple cup product over an odd modulus.  See the project notes.\n");
    }
}

// ---------------------------------------------------------------- criterion 2
void criterion_oracles() {
    const u64 samples = 10000;
    bool pass = true;
    std::string detail;
    auto add = [&](const char* tag, const OracleReport& r) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%s:%llu%s", tag, (unsigned long long)r.checked,
                      r.exhaustive ? "(exh)" : "");
        if (!detail.empty()) detail += " ";
        detail += buf;
        if (!r.ok()) {
            pass = false;
            std::printf("       %s mismatch: %s\n", tag, r.first_mismatch.c_str());
        }
    };

    {
        BranchedSetup s = branched_setup(2);
        Representation f = Representation::constant(right_trefoil().d, 1);
        add("trefoil-n2", check_trefoil_oracle(s.module, s.psi, f, samples, 0));
    }
    {
        GModule perm = s3_perm_module();
        TrilinearPsi psi = s3_psi();
        psi.check(perm, perm, perm);
        Representation f = s3_trefoil_rep(right_trefoil().d, perm.group());
        add("trefoil-S3", check_trefoil_oracle(perm, psi, f, samples, 0));
    }
    {
        BranchedSetup s = branched_setup(2);
        add("fig8-n2", check_fig8_oracle(s.module, s.psi, 1, samples, 0));
    }
    {
        BranchedSetup s = branched_setup(4);
        add("fig8-n4", check_fig8_oracle(s.module, s.psi, 1, samples, 0));
    }
    {
        auto z3 = std::make_shared<FiniteGroup>(FiniteGroup::cyclic(3));
        GModule z9 = GModule::from_generator_matrices(z3, 9, 1, {IntMat{{4}}});
        TrilinearPsi psi9 = TrilinearPsi::tensor(9, 1, 1, 1, {1});
        psi9.check(z9, z9, z9);
        OracleReport total;
        for (int za = 0; za < 3 && total.mismatches == 0; ++za)
            for (int zb = 0; zb < 3; ++zb) {
                OracleReport r = check_torus_oracle(2, z9, psi9, {za, zb}, 1u << 21, 0);
                total.checked += r.checked;
                total.mismatches += r.mismatches;
                total.exhaustive = r.exhaustive;
                if (r.mismatches && total.first_mismatch.empty()) total.first_mismatch = r.first_mismatch;
            }
        add("torus22", total);
    }
    {
        BranchedSetup s = branched_setup(2);
        add("torus33-n2", check_torus_oracle(3, s.module, s.psi, {1, 1, 1}, samples, 0));
    }
    report(2, "generic sum equals the closed-form oracles", pass, detail);
}

// ---------------------------------------------------------------- criterion 3
void criterion_rmoves() {
    bool pass = true;
    u64 total = 0;
    int pairs = 0;
    auto run = [&](const LinkDiagram& d, const Representation& f, const GModule& m,
                   const TrilinearPsi& psi, const RMoveSite& site, const char* tag) {
        InvarianceReport r = check_move_invariance(d, f, m, m, m, psi, site, 16, 0);
        total += r.checked;
        ++pairs;
        if (!r.ok()) {
            pass = false;
            std::printf("       %s: %llu mismatches (%s)\n", tag,
                        (unsigned long long)r.mismatches, r.first_mismatch.c_str());
        }
    };

    LinkDiagram tre = LinkDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    Representation ft = Representation::constant(tre, 1);
    GModule perm = s3_perm_module();
    TrilinearPsi psi3 = s3_psi();
    Representation fs3 = s3_trefoil_rep(tre, perm.group());

    for (i64 n : {2, 4}) {
        BranchedSetup s = branched_setup(n);
        run(tre, ft, s.module, s.psi, RMoveSite{.kind = "r1", .edge = 1, .sign = 1}, "r1+ branched");
        run(tre, ft, s.module, s.psi,
            RMoveSite{.kind = "r1", .edge = 3, .sign = -1, .under_first = false}, "r1- branched");
        run(tre, ft, s.module, s.psi,
            RMoveSite{.kind = "r2", .edge = 1, .target = 5, .face = tre.face_left(tre.edge_index(1)),
                      .over = true},
            "r2-over branched");
        run(tre, ft, s.module, s.psi,
            RMoveSite{.kind = "r2", .edge = 2, .target = 4, .face = tre.face_right(tre.edge_index(2)),
                      .over = false},
            "r2-under branched");
    }
    run(tre, fs3, perm, psi3, RMoveSite{.kind = "r1", .edge = 1, .sign = 1}, "r1+ S3");
    run(tre, fs3, perm, psi3, RMoveSite{.kind = "r1", .edge = 2, .sign = -1}, "r1- S3");
    run(tre, fs3, perm, psi3,
        RMoveSite{.kind = "r2", .edge = 1, .target = 5, .face = tre.face_left(tre.edge_index(1)),
                  .over = true},
        "r2-over S3");
    run(tre, fs3, perm, psi3,
        RMoveSite{.kind = "r2", .edge = 2, .target = 4, .face = tre.face_right(tre.edge_index(2)),
                  .over = false},
        "r2-under S3");

    // triangles inside 5- and 6-crossing braid closures, both handednesses
    for (auto word : {std::vector<int>{2, 1, 2, 1, 1}, std::vector<int>{-2, -1, -2, -1, -1},
                      std::vector<int>{2, 1, 2, 1, 1, 2}}) {
        BraidClosure bc = braid_closure(3, word);
        auto faces = find_r3_faces(bc.diagram);
        if (faces.empty()) {
            pass = false;
            std::printf("       no admissible R3 triangle in the braid diagram\n");
            continue;
        }
        Representation f = Representation::constant(bc.diagram, 1);
        for (i64 n : {2, 4}) {
            BranchedSetup s = branched_setup(n);
            run(bc.diagram, f, s.module, s.psi, RMoveSite{.kind = "r3", .face = faces.front()},
                word[0] > 0 ? "r3 (positive patch)" : "r3 (negative patch)");
        }
    }

    char detail[96];
    std::snprintf(detail, sizeof detail, "%d (diagram, move, setup) runs, %llu triples", pairs,
                  (unsigned long long)total);
    report(3, "Reidemeister invariance through transport", pass, detail);
}

// ---------------------------------------------------------------- criterion 4
void criterion_brute_force() {
    bool pass = true;
    u64 diagrams = 0;
    auto check = [&](const char* tag, const LinkDiagram& d, const Representation& f, const GModule& m) {
        ++diagrams;
        const int rank = m.rank();
        const i64 n = m.modulus();
        std::set<Vec> brute;
        Vec cur(std::size_t(d.arc_count() * rank), 0);
        auto valid = [&] {
            for (int c = 0; c < d.crossing_count(); ++c) {
                auto arc_x = [&](int a) {
                    return XElem{Vec(cur.begin() + a * rank, cur.begin() + (a + 1) * rank), f.at(a)};
                };
                XElem in = arc_x(d.under_in_arc(c)), over = arc_x(d.over_arc(c)),
                      out = arc_x(d.under_out_arc(c));
                XElem expect = d.sign(c) > 0 ? quandle_op(m, in, over) : quandle_op_inv(m, in, over);
                if (!(expect == out)) return false;
            }
            return true;
        };
        for (;;) {
            if (valid()) brute.insert(cur);
            std::size_t i = 0;
            while (i < cur.size() && ++cur[i] == n) cur[i++] = 0;
            if (i == cur.size()) break;
        }
        ColoringSpace space(d, f, m);
        std::set<Vec> solved;
        space.full().enumerate(1u << 21, [&](const Vec& v) { solved.insert(v); });
        bool same = solved == brute && space.count() == u128(brute.size()) &&
                    space.count() == space.reduced_count() * u128(m.size());
        if (!same) {
            pass = false;
            std::printf("       %s: solver %zu vs brute force %zu\n", tag, solved.size(), brute.size());
        }
    };

    LinkDiagram tre = LinkDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    LinkDiagram f8 = LinkDiagram::parse("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)");
    LinkDiagram hopf = LinkDiagram::parse("X(1,3,2,4) X(3,1,4,2)");
    LinkDiagram kink = LinkDiagram::parse("X(1,1,2,2)");
    LinkDiagram k52 = LinkDiagram::parse(census_lookup("5_2").pd);
    LinkDiagram k61 = LinkDiagram::parse(census_lookup("6_1").pd);
    LinkDiagram k63 = LinkDiagram::parse(census_lookup("6_3").pd);
    BraidClosure t33 = torus_mm(3);

    check("trefoil n=2", tre, Representation::constant(tre, 1), branched_setup(2).module);
    check("trefoil n=3", tre, Representation::constant(tre, 1), branched_setup(3).module);
    check("fig8 n=2", f8, Representation::constant(f8, 1), branched_setup(2).module);
    check("fig8 n=3", f8, Representation::constant(f8, 1), branched_setup(3).module);
    check("kink n=5", kink, Representation::constant(kink, 1), branched_setup(5).module);
    check("5_2 n=2", k52, Representation::constant(k52, 1), branched_setup(2).module);
    check("6_1 n=2", k61, Representation::constant(k61, 1), branched_setup(2).module);
    check("6_3 n=3", k63, Representation::constant(k63, 1), branched_setup(3).module);
    check("T(3,3) n=2", t33.diagram, Representation::constant(t33.diagram, 1),
          branched_setup(2).module);
    {
        auto z3 = std::make_shared<FiniteGroup>(FiniteGroup::cyclic(3));
        GModule z9 = GModule::from_generator_matrices(z3, 9, 1, {IntMat{{4}}});
        check("hopf Z/9", hopf, Representation{{1, 2}}, z9);
    }
    {
        GModule perm = s3_perm_module();
        Representation f = s3_trefoil_rep(tre, perm.group());
        check("trefoil S3 perm", tre, f, perm);
    }

    char detail[64];
    std::snprintf(detail, sizeof detail, "%llu diagram/setup pairs", (unsigned long long)diagrams);
    report(4, "exhaustive coloring enumeration matches the kernel solver", pass, detail);
}

// ---------------------------------------------------------------- criterion 5
void criterion_algebra() {
    bool pass = true;

    // quandle axioms, >= 10^3 random triples per setup
    std::vector<GModule> mods;
    for (i64 n : {2, 3, 4, 5}) mods.push_back(branched_setup(n).module);
    mods.push_back(s3_perm_module());
    Rng rng(0);
    for (const GModule& m : mods) {
        for (int iter = 0; iter < 1000; ++iter) {
            auto rand_x = [&] {
                Vec v(std::size_t(m.rank()));
                for (auto& c : v) c = i64(rng.below(u64(m.modulus())));
                return XElem{v, int(rng.below(u64(m.group().order())))};
            };
            XElem x = rand_x(), y = rand_x(), z = rand_x();
            bool ok = quandle_op(m, x, x) == x &&
                      quandle_op_inv(m, quandle_op(m, x, y), y) == x &&
                      quandle_op(m, quandle_op_inv(m, x, y), y) == x &&
                      quandle_op(m, quandle_op(m, x, y), z) ==
                          quandle_op(m, quandle_op(m, x, z), quandle_op(m, y, z));
            if (!ok) {
                pass = false;
                std::printf("       quandle axiom violated\n");
                break;
            }
        }
    }

    // SNF postconditions on >= 10^3 random matrices
    for (int iter = 0; iter < 1000; ++iter) {
        int r = 1 + int(rng.below(6)), c = 1 + int(rng.below(6));
        IntMat a(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) a(i, j) = rng.range(-50, 50);
        SnfResult f = snf(a);
        bool ok = f.u.mul(BigMat::from(a)).mul(f.v) == f.s && f.u.mul(f.uinv).is_identity() &&
                  f.v.mul(f.vinv).is_identity();
        for (int i = 0; ok && i + 1 < f.diag_count(); ++i) {
            if (f.diag(i).sign() < 0) ok = false;
            if (!f.diag(i).is_zero() && !(f.diag(i + 1) % f.diag(i)).is_zero()) ok = false;
            if (f.diag(i).is_zero() && !f.diag(i + 1).is_zero()) ok = false;
        }
        if (!ok) {
            pass = false;
            std::printf("       SNF postcondition violated at iteration %d\n", iter);
            break;
        }
    }

    // psi_0 invariance, exhaustive for every Z/3 branched setup in range
    for (i64 n = 2; n <= 9; ++n) {
        BranchedSetup s = branched_setup(n);
        try {
            s.psi.check(s.module, s.module, s.module);
        } catch (const std::exception& e) {
            pass = false;
            std::printf("       psi_0 invariance failed at n=%lld: %s\n", (long long)n, e.what());
        }
    }

    report(5, "quandle axioms, SNF postconditions, psi_0 invariance", pass,
           "5 setups x 1000 triples; 1000 random matrices; n=2..9");
}

// ---------------------------------------------------------------- criterion 6
void criterion_diagram_independence() {
    bool pass = true;
    const std::vector<std::pair<std::string, i64>> rows{{"3_1", 2}, {"4_1", 4}, {"5_1", 3},
                                                        {"5_2", 5}, {"6_1", 7}, {"6_2", 5},
                                                        {"6_3", 7}};
    for (auto& [name, n] : rows) {
        const CensusEntry& e = census_lookup(name);
        BranchedResult r1 = branched_form(LinkDiagram::parse(e.pd), n, name);
        BranchedResult r2 = branched_form(LinkDiagram::parse(e.pd_alt), n, name);
        QuotRing a = QuotRing::eisenstein(n);
        bool same = r1.reduced_orders == r2.reduced_orders &&
                    semilinear_canonical(a, r1.lambda) == semilinear_canonical(a, r2.lambda) &&
                    r1.form_is_zero() == r2.form_is_zero();
        if (!same) {
            pass = false;
            std::printf("       %s n=%lld: %s vs %s\n", name.c_str(), (long long)n,
                        r1.pretty.c_str(), r2.pretty.c_str());
        }
    }
    report(6, "equivalent forms from independent diagrams of each knot", pass,
           "7 knots, primary vs stabilized code");
}

}  // namespace

int main() {
    criterion_table();
    criterion_oracles();
    criterion_rmoves();
    criterion_brute_force();
    criterion_algebra();
    criterion_diagram_independence();
    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return 1;
}
