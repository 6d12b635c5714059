#pragma once

#include "cupcube/oracles.hpp"

namespace cupcube {

// Bundled prime-knot census: one primary PD code per knot plus one
// alternative diagram of the same oriented knot for cross-checking.
struct CensusEntry {
    std::string name;
    std::string pd;       // primary code
    std::string pd_alt;   // Reidemeister-stabilized alternative
};
const std::vector<CensusEntry>& knot_census();
const CensusEntry& census_lookup(const std::string& name);

// G = Z/3, M_i = Z[t]/(n, t^2+t+1) with t acting by multiplication, f = t on
// every arc, psi_0(x,y,z) = xyz.
struct BranchedSetup {
    std::shared_ptr<const FiniteGroup> group;
    QuotRing ring;
    GModule module;
    TrilinearPsi psi;
};
BranchedSetup branched_setup(i64 n);

struct BranchedResult {
    std::string knot;
    i64 n = 0;
    std::vector<i64> reduced_orders;  // cyclic factor orders of Col_red
    CubicForm form;                   // over A = Z[t]/(n, t^2+t+1)
    bool rank_one = false;            // Col_red free of rank 1 over A
    Vec lambda;                       // T(v,v,v) for an A-generator v
    Vec lambda_canonical;             // min of the semilinear orbit
    std::size_t orbit_size = 0;
    std::string pretty;               // cubic polynomial of the canonical form

    bool form_is_zero() const { return form.is_zero(); }
};

BranchedResult branched_form(const LinkDiagram& d, i64 n, const std::string& name = "");

// Coefficientwise projection a + tb -> a of a form over A down to Z/n.
CubicForm p_project(const QuotRing& a, const CubicForm& form);

// Equivalence of branched forms under per-slot semilinear changes; both
// sides must be rank-one-or-zero (the census rows all are).
bool branched_equivalent(const QuotRing& a, const BranchedResult& x, const Vec& target_lambda);

struct TableRow {
    std::string knot;
    i64 n;
    std::string expected;  // "abc", "2abc", "(1+t)abc", "0"
    bool pass;
    std::string got;
};
std::vector<TableRow> table_check();

}  // namespace cupcube
