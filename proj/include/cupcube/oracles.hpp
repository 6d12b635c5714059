#pragma once

#include "cupcube/rmoves.hpp"
#include "cupcube/trilinear.hpp"

namespace cupcube {

// PD code of a braid closure.  word entries: +k for sigma_k (position k
// passes under position k+1), -k for its inverse.  The returned top_edges[j]
// is the edge label entering the braid at position j; its arc carries the
// j-th closure colour.
struct BraidClosure {
    LinkDiagram diagram;
    std::vector<i64> top_edges;
};
BraidClosure braid_closure(int strands, const std::vector<int>& word);

// T(m,m) as the closure of (sigma_1 ... sigma_{m-1})^m; top arc l carries
// the colour x_l of the torus-link coloring equations.
BraidClosure torus_mm(int m);

// All-positive trefoil diagram matching the worked trefoil computation:
// arcs alpha={3,4}, beta={1,2}, gamma={5,6}.
struct TrefoilDiagram {
    LinkDiagram d;
    int alpha, beta, gamma;  // arc ids
    int paper_unbounded;     // outer face of the drawn diagram
};
TrefoilDiagram right_trefoil();

// Standard figure-eight diagram; arc ids for the worked computation's
// alpha_1..alpha_4 (colours x_1..x_4, with x_3, x_4 determined by x_1, x_2).
struct Fig8Diagram {
    LinkDiagram d;
    std::array<int, 4> alpha;
    int paper_unbounded;
};
Fig8Diagram fig8();

// Closed form for the trefoil: psi((a1-b1) g^-1, (a2-b2) h, a3-b3), defined
// when ghg = hgh and (a_i-b_i)(1-g+hg) = (a_i-b_i)(1-h+gh) = 0.
Vec oracle_trefoil(const GModule& m1, const GModule& m2, const GModule& m3, const TrilinearPsi& psi,
                   int g, int h, const std::array<Vec, 3>& a, const std::array<Vec, 3>& b);

// Two-term closed form for the figure-eight on colours (x1, x2) per slot.
Vec oracle_fig8(const GModule& m1, const GModule& m2, const GModule& m3, const TrilinearPsi& psi,
                int z1, int z2, const std::array<Vec, 3>& x1, const std::array<Vec, 3>& x2);

// Double-sum closed form for T(m,m); w, x, y are the three slots' closure
// colours (size m each), z the group elements of the top arcs.
Vec oracle_torus_mm(int m, const GModule& m1, const GModule& m2, const GModule& m3,
                    const TrilinearPsi& psi, const std::vector<int>& z,
                    const std::vector<Vec>& w, const std::vector<Vec>& x, const std::vector<Vec>& y);

// Membership matrix of the torus coloring equations (Gamma_f); colourings of
// T(m,m) are the row vectors x with x*Gamma = 0.
IntMat torus_gamma(int m, const GModule& mod, const std::vector<int>& z);

// Region pinned so the double-sum formula matches the drawn diagram.
int torus_paper_unbounded(const BraidClosure& b);

// Generic-engine vs closed-form comparison harness.
struct OracleReport {
    u64 checked = 0;
    u64 mismatches = 0;
    std::string first_mismatch;
    bool exhaustive = false;
    bool ok() const { return mismatches == 0 && checked > 0; }
};

OracleReport check_trefoil_oracle(const GModule& mod, const TrilinearPsi& psi,
                                  const Representation& f_on_abg, u64 sample_budget, u64 seed);
OracleReport check_fig8_oracle(const GModule& mod, const TrilinearPsi& psi, int z, u64 sample_budget,
                               u64 seed);
OracleReport check_torus_oracle(int m, const GModule& mod, const TrilinearPsi& psi,
                                const std::vector<int>& z, u64 sample_budget, u64 seed);

}  // namespace cupcube
