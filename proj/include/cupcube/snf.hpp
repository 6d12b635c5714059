#pragma once

#include <optional>

#include "cupcube/bigint.hpp"

namespace cupcube {

// U*A*V = S with U,V unimodular, S diagonal, d1 | d2 | ... | dk >= 0.
// Transforms are exact integers of unbounded size.
struct SnfResult {
    BigMat u, uinv, v, vinv, s;
    int diag_count() const { return std::min(s.rows(), s.cols()); }
    const BigInt& diag(int i) const { return s(i, i); }
};

SnfResult snf(const IntMat& a);

// Basis of a finite submodule of (Z/n)^ambient.  Generators are independent:
// the module is the direct sum of cyclic groups <gen[i]> with |<gen[i]>| =
// order[i] > 1, so cardinality() = prod(order[i]).
class ModuleBasis {
  public:
    ModuleBasis() = default;

    int ambient() const { return ambient_; }
    i64 modulus() const { return n_; }
    int rank() const { return int(gens_.size()); }
    const Vec& gen(int i) const { return gens_[std::size_t(i)]; }
    const std::vector<Vec>& gens() const { return gens_; }
    i64 order(int i) const { return orders_[std::size_t(i)]; }
    const std::vector<i64>& orders() const { return orders_; }

    u128 cardinality() const {
        u128 c = 1;
        for (i64 d : orders_) c *= u128(d);
        return c;
    }

    // Element for a coefficient tuple (coeff[i] taken mod order[i]).
    Vec element(const std::vector<i64>& coeffs) const;

    // Coefficients of x in this basis, or nullopt if x is not a member.
    std::optional<std::vector<i64>> coords(const Vec& x) const;
    bool contains(const Vec& x) const { return coords(x).has_value(); }

    // Visit every element; throws if cardinality exceeds the budget.
    void enumerate(u64 budget, const std::function<void(const Vec&)>& fn) const;

  private:
    friend ModuleBasis kernel_mod(const IntMat&, i64);
    int ambient_ = 0;
    i64 n_ = 1;
    std::vector<Vec> gens_;
    std::vector<i64> orders_;
    // Membership data: z = x * uinv (mod n); z[i] must be a multiple of
    // n/order of the cyclic factor at that position (order 1 forces z[i]=0).
    IntMat uinv_;
    std::vector<i64> zorder_;    // per z-coordinate: order of its factor
    std::vector<int> zto_gen_;   // z index -> generator index (-1 if order 1)
};

// Kernel of x -> x*A over Z/n (row-vector convention, x in (Z/n)^rows(A)).
ModuleBasis kernel_mod(const IntMat& a, i64 n);

// One solution of x*A = b over Z/n, if any.
std::optional<Vec> solve_mod(const IntMat& a, const Vec& b, i64 n);

}  // namespace cupcube
