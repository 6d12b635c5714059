#include "cupcube/gmodule.hpp"

namespace cupcube {

void GModule::complete_from_generators(const std::vector<IntMat>& gen_mats) {
    if (gen_mats.size() != group_->generators().size())
        throw InputError("GModule: need one matrix per group generator");
    for (const IntMat& m : gen_mats)
        if (m.rows() != rank_ || m.cols() != rank_) throw InputError("GModule: matrix dimension mismatch");
    mats_.assign(std::size_t(group_->order()), IntMat());
    for (int g = 0; g < group_->order(); ++g) {
        IntMat acc = IntMat::identity(rank_);
        for (int gi : group_->generator_words()[std::size_t(g)])
            acc = acc.mul_mod(gen_mats[std::size_t(gi)], n_);
        mats_[std::size_t(g)] = std::move(acc);
    }
}

GModule GModule::from_generator_matrices(std::shared_ptr<const FiniteGroup> g, i64 n, int rank,
                                         const std::vector<IntMat>& gen_mats) {
    if (n < 1) throw InputError("GModule: modulus must be >= 1");
    if (rank < 1) throw InputError("GModule: rank must be >= 1");
    GModule m;
    m.group_ = std::move(g);
    m.n_ = n;
    m.rank_ = rank;
    m.complete_from_generators(gen_mats);
    m.check();
    return m;
}

GModule GModule::quotring_module(std::shared_ptr<const FiniteGroup> g, const QuotRing& ring,
                                 const std::vector<Vec>& gen_units) {
    std::vector<IntMat> mats;
    for (const Vec& u : gen_units) {
        if (!ring.is_unit(u)) throw InputError("GModule: ring action element is not a unit");
        mats.push_back(ring.mult_matrix(u));
    }
    GModule m = from_generator_matrices(std::move(g), ring.modulus(), ring.deg(), mats);
    m.ring_ = ring;
    return m;
}

GModule GModule::trivial(std::shared_ptr<const FiniteGroup> g, i64 n, int rank) {
    std::vector<IntMat> mats(g->generators().size(), IntMat::identity(rank));
    return from_generator_matrices(std::move(g), n, rank, mats);
}

void GModule::check() const {
    const FiniteGroup& g = *group_;
    if (!(mats_[0] == IntMat::identity(rank_))) throw ComputeError("GModule: rho(1) != I");
    for (int a = 0; a < g.order(); ++a) {
        if (!(rho(a).mul_mod(rho_inv(a), n_) == IntMat::identity(rank_)))
            throw ComputeError("GModule: rho(" + g.name(a) + ") is not invertible mod n");
        for (int b = 0; b < g.order(); ++b)
            if (!(rho(a).mul_mod(rho(b), n_) == rho(g.mul(a, b))))
                throw ComputeError("GModule: rho(g h) != rho(g) rho(h) at g=" + g.name(a) +
                                   ", h=" + g.name(b));
    }
}

std::vector<Vec> GModule::all_vectors(u64 budget) const {
    if (size() > u128(budget)) throw ComputeError("GModule::all_vectors: budget exceeded");
    std::vector<Vec> out;
    Vec cur = zero();
    for (;;) {
        out.push_back(cur);
        int i = 0;
        while (i < rank_) {
            if (++cur[std::size_t(i)] < n_) break;
            cur[std::size_t(i)] = 0;
            ++i;
        }
        if (i == rank_) break;
    }
    return out;
}

}  // namespace cupcube
