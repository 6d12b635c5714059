#pragma once

#include "cupcube/coloring.hpp"

namespace cupcube {

// G-invariant trilinear map psi : M1 x M2 x M3 -> A.  Either the product
// form xyz on a quotient ring (all three modules must be that ring) or an
// explicit coefficient tensor with codomain Z/n.
class TrilinearPsi {
  public:
    static TrilinearPsi product(const QuotRing& a);
    static TrilinearPsi tensor(i64 n, int d1, int d2, int d3, std::vector<i64> coeffs);

    const QuotRing& codomain() const { return codomain_; }
    bool is_product() const { return product_; }

    Vec eval(const Vec& x, const Vec& y, const Vec& z) const;

    // Trilinearity on basis triples plus G-invariance (eq. psi(ag,bg,cg) =
    // psi(a,b,c)) over every group element; throws naming the violation.
    void check(const GModule& m1, const GModule& m2, const GModule& m3) const;

  private:
    TrilinearPsi(QuotRing codomain, bool product) : codomain_(std::move(codomain)), product_(product) {}
    QuotRing codomain_;
    bool product_;
    int d1_ = 0, d2_ = 0, d3_ = 0;
    std::vector<i64> coeffs_;  // tensor case, d1*d2*d3
};

// How the weight reads a negative crossing.  The positive convention is
// fixed: b-arc = incoming under-arc, c-arc = over-arc, region = quadrant 0
// (between the incoming under-edge and slot 1), value
// psi((A-B)(1-rho(g)), B-C, C(1-rho(h)^-1)).  The negative convention is
// pinned by the R2/R3 invariance suites (see tests); the default reads the
// crossing with the under-strand reversed and negates.
struct WeightConvention {
    int neg_quadrant = 1;         // region = quadrant between slots 1 and 2
    bool neg_b_under_out = true;  // b-arc = outgoing under-arc
    int neg_slot1_exp = 1;        // exponent on rho(f(b-arc))
    int neg_slot3_exp = -1;       // exponent on rho(f(c-arc))
    bool neg_negate = true;
};

inline WeightConvention pinned_convention() { return WeightConvention{}; }

Vec weight(const LinkDiagram& d, const Representation& f, const GModule& m1, const GModule& m2,
           const GModule& m3, const ShadowColoring& s1, const ShadowColoring& s2,
           const ShadowColoring& s3, const TrilinearPsi& psi, int crossing,
           const WeightConvention& conv = pinned_convention());

Vec trilinear_sum(const LinkDiagram& d, const Representation& f, const GModule& m1,
                  const GModule& m2, const GModule& m3, const ShadowColoring& s1,
                  const ShadowColoring& s2, const ShadowColoring& s3, const TrilinearPsi& psi,
                  const WeightConvention& conv = pinned_convention());

// Remark-style diagonal restriction: J(S) = T(S,S,S).
Vec diagonal_invariant(const LinkDiagram& d, const Representation& f, const GModule& m,
                       const ShadowColoring& s, const TrilinearPsi& psi,
                       const WeightConvention& conv = pinned_convention());

// T over the reduced coloring bases of the three modules.
struct CubicForm {
    QuotRing codomain;
    std::array<std::vector<i64>, 3> orders;  // generator orders per slot
    std::vector<Vec> tensor;                 // flattened r1*r2*r3

    CubicForm() : codomain(QuotRing::zn(1)) {}
    int rank(int slot) const { return int(orders[std::size_t(slot)].size()); }
    const Vec& at(int i, int j, int k) const {
        return tensor[std::size_t((i * rank(1) + j) * rank(2) + k)];
    }
    bool is_zero() const {
        for (const Vec& v : tensor)
            if (!vec_is_zero(v)) return false;
        return true;
    }
};

CubicForm cubic_tensor(const LinkDiagram& d, const Representation& f, const GModule& m1,
                       const GModule& m2, const GModule& m3, const TrilinearPsi& psi,
                       int unbounded_face = -1,
                       const WeightConvention& conv = pinned_convention());

// Scalar canonicalization for rank-1 forms over Z[t]/(n, t^2+t+1): the orbit
// of lambda under per-slot unit scaling and the Galois twist is
// {lambda*u} union {galois(lambda)*u}; the canonical representative is the
// lexicographically smallest coefficient vector.
Vec semilinear_canonical(const QuotRing& a, const Vec& lambda);
std::size_t semilinear_orbit_size(const QuotRing& a, const Vec& lambda);

// Budgeted equivalence of raw tensors under per-slot module automorphisms.
enum class EquivResult { equivalent, inequivalent, budget_exceeded };
EquivResult tensors_equivalent(const CubicForm& a, const CubicForm& b, u64 budget);

}  // namespace cupcube
