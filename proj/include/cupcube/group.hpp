#pragma once

#include <map>
#include <optional>
#include <string>

#include "cupcube/common.hpp"

namespace cupcube {

// Finite group as a multiplication table.  Element 0 is the identity.
// mul(g,h) composes left-to-right, matching right actions:
// rho(mul(g,h)) = rho(g)*rho(h).
class FiniteGroup {
  public:
    static FiniteGroup cyclic(int m);  // generator named "t"
    // Generated permutation group; images are 1-based ("perm[i] = image of i").
    static FiniteGroup from_permutations(int degree,
                                         const std::vector<std::pair<std::string, std::vector<int>>>& gens);
    static FiniteGroup symmetric3();  // S3 with generators s=(12), c=(123)
    static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                  std::vector<std::string> names = {});

    int order() const { return order_; }
    int mul(int g, int h) const { return table_[std::size_t(g) * order_ + h]; }
    int inv(int g) const { return inv_[std::size_t(g)]; }
    int identity() const { return 0; }
    int conj(int g, int h) const { return mul(mul(inv(h), g), h); }  // h^-1 g h
    int pow(int g, i64 e) const;

    const std::vector<int>& generators() const { return gens_; }
    // Each element as a product of generators (indices into generators()).
    const std::vector<std::vector<int>>& generator_words() const { return words_; }

    const std::string& name(int g) const { return names_[std::size_t(g)]; }
    std::optional<int> element_by_name(const std::string& s) const;
    bool is_abelian() const;

  private:
    FiniteGroup() = default;
    void finish();  // validates table, builds inverses

    int order_ = 0;
    std::vector<int> table_;
    std::vector<int> inv_;
    std::vector<int> gens_;
    std::vector<std::vector<int>> words_;
    std::vector<std::string> names_;
};

}  // namespace cupcube
