#pragma once

#include <memory>

#include "cupcube/group.hpp"
#include "cupcube/quotring.hpp"

namespace cupcube {

// Finite right G-module: free rank-d module over Z/n with an invertible
// action matrix per group element, acting on row vectors from the right.
class GModule {
  public:
    // Complete rho from matrices on the group's generating set.
    static GModule from_generator_matrices(std::shared_ptr<const FiniteGroup> g, i64 n, int rank,
                                           const std::vector<IntMat>& gen_mats);
    // Quotient ring R as a module: each generator acts by multiplication by a
    // unit of R.
    static GModule quotring_module(std::shared_ptr<const FiniteGroup> g, const QuotRing& ring,
                                   const std::vector<Vec>& gen_units);
    // Coordinate-permutation module (Z/n)^degree for a permutation-described
    // group generator set.
    static GModule trivial(std::shared_ptr<const FiniteGroup> g, i64 n, int rank);

    const FiniteGroup& group() const { return *group_; }
    std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
    i64 modulus() const { return n_; }
    int rank() const { return rank_; }
    u128 size() const {
        u128 s = 1;
        for (int i = 0; i < rank_; ++i) s *= u128(n_);
        return s;
    }

    const IntMat& rho(int g) const { return mats_[std::size_t(g)]; }
    const IntMat& rho_inv(int g) const { return mats_[std::size_t(group_->inv(g))]; }

    Vec act(const Vec& m, int g) const { return vec_mat_mul_mod(m, rho(g), n_); }
    Vec zero() const { return Vec(std::size_t(rank_), 0); }

    // The quotient ring this module is, when built by quotring_module.
    const std::optional<QuotRing>& ring() const { return ring_; }

    // rho(1) = I, rho(gh) = rho(g) rho(h) for all pairs, all rho invertible.
    // Throws ComputeError naming the first violated pair.
    void check() const;

    std::vector<Vec> all_vectors(u64 budget) const;

  private:
    GModule() = default;
    void complete_from_generators(const std::vector<IntMat>& gen_mats);

    std::shared_ptr<const FiniteGroup> group_;
    i64 n_ = 1;
    int rank_ = 0;
    std::vector<IntMat> mats_;
    std::optional<QuotRing> ring_;
};

}  // namespace cupcube
