#pragma once

#include <optional>
#include <string>

#include "cupcube/intmat.hpp"

namespace cupcube {

// Z[t]/(n, p(t)) with p monic; elements are coefficient vectors of length
// deg(p), constant term first.  n >= 1.  Z/n itself is the degree-1 case
// p(t) = t.
class QuotRing {
  public:
    QuotRing(i64 n, Vec p);

    static QuotRing zn(i64 n) { return QuotRing(n, Vec{0, 1}); }
    // Z[t]/(n, t^2 + t + 1), the coefficient ring of the branched-cover setup.
    static QuotRing eisenstein(i64 n) { return QuotRing(n, Vec{1, 1, 1}); }

    i64 modulus() const { return n_; }
    int deg() const { return int(p_.size()) - 1; }
    const Vec& poly() const { return p_; }
    bool operator==(const QuotRing& o) const { return n_ == o.n_ && p_ == o.p_; }

    Vec zero() const { return Vec(deg(), 0); }
    Vec one() const;
    Vec t() const;
    Vec from_int(i64 c) const;

    Vec add(const Vec& a, const Vec& b) const { return vec_add_mod(a, b, n_); }
    Vec sub(const Vec& a, const Vec& b) const { return vec_sub_mod(a, b, n_); }
    Vec neg(const Vec& a) const { return vec_scaled_mod(a, -1, n_); }
    Vec mul(const Vec& a, const Vec& b) const;
    Vec mul_int(const Vec& a, i64 c) const { return vec_scaled_mod(a, c, n_); }
    Vec pow(const Vec& a, u64 e) const;

    bool is_unit(const Vec& a) const { return inverse(a).has_value(); }
    std::optional<Vec> inverse(const Vec& a) const;

    // Multiplication-by-a matrix acting on row vectors: x * mat = x*a.
    IntMat mult_matrix(const Vec& a) const;

    // p: a0 + a1 t + ... -> a0 (the projection of the branched-cover setup).
    i64 p_project(const Vec& a) const { return a.empty() ? 0 : a[0]; }

    // Substitute t -> t^2.  A ring map for p = t^2+t+1 (Galois twist).
    Vec galois(const Vec& a) const;

    std::vector<Vec> all_elements() const;  // n^deg elements, lex order
    std::vector<Vec> units() const;

    std::string show(const Vec& a) const;  // e.g. "1+2t"

  private:
    i64 n_;
    Vec p_;  // monic, length deg+1
};

}  // namespace cupcube
