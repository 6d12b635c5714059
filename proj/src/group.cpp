#include "cupcube/group.hpp"

#include <algorithm>
#include <queue>

namespace cupcube {

void FiniteGroup::finish() {
    order_ = int(names_.size());
    inv_.assign(std::size_t(order_), -1);
    for (int g = 0; g < order_; ++g) {
        if (mul(0, g) != g || mul(g, 0) != g) throw InputError("group: 0 is not an identity");
        for (int h = 0; h < order_; ++h)
            if (mul(g, h) == 0) inv_[std::size_t(g)] = h;
    }
    for (int g = 0; g < order_; ++g) {
        if (inv_[std::size_t(g)] < 0) throw InputError("group: element without inverse");
        if (mul(inv_[std::size_t(g)], g) != 0) throw InputError("group: inverse is one-sided");
    }
    // Associativity is exhaustively checked for table-based inputs; generated
    // groups satisfy it by construction but the check is cheap at our sizes.
    if (order_ <= 128) {
        for (int a = 0; a < order_; ++a)
            for (int b = 0; b < order_; ++b)
                for (int c = 0; c < order_; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw InputError("group: multiplication table is not associative");
    }
    if (words_.empty()) {
        // Fallback generating set: all elements, trivial words.
        words_.assign(std::size_t(order_), {});
        gens_.clear();
        for (int g = 1; g < order_; ++g) {
            gens_.push_back(g);
            words_[std::size_t(g)] = {int(gens_.size()) - 1};
        }
    }
}

int FiniteGroup::pow(int g, i64 e) const {
    int base = e < 0 ? inv(g) : g;
    u64 k = u64(e < 0 ? -e : e);
    int acc = 0;
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

std::optional<int> FiniteGroup::element_by_name(const std::string& s) const {
    for (int g = 0; g < order_; ++g)
        if (names_[std::size_t(g)] == s) return g;
    return std::nullopt;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order_; ++a)
        for (int b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

FiniteGroup FiniteGroup::cyclic(int m) {
    if (m < 1) throw InputError("cyclic group: order must be >= 1");
    FiniteGroup g;
    g.table_.assign(std::size_t(m) * m, 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) g.table_[std::size_t(a) * m + b] = (a + b) % m;
    g.names_.resize(std::size_t(m));
    for (int a = 0; a < m; ++a)
        g.names_[std::size_t(a)] = a == 0 ? "1" : (a == 1 ? "t" : "t^" + std::to_string(a));
    if (m > 1) {
        g.gens_ = {1};
        g.words_.resize(std::size_t(m));
        for (int a = 1; a < m; ++a) g.words_[std::size_t(a)].assign(std::size_t(a), 0);
    }
    g.finish();
    return g;
}

FiniteGroup FiniteGroup::from_permutations(
    int degree, const std::vector<std::pair<std::string, std::vector<int>>>& gens) {
    if (degree < 1) throw InputError("permutation group: degree must be >= 1");
    using Perm = std::vector<int>;  // 0-based images
    Perm id(std::size_t(degree), 0);
    for (int i = 0; i < degree; ++i) id[std::size_t(i)] = i;

    std::vector<Perm> gen_perms;
    for (auto& [name, images] : gens) {
        if (int(images.size()) != degree) throw InputError("permutation group: bad image list");
        Perm p(std::size_t(degree), 0);
        std::vector<bool> seen(std::size_t(degree), false);
        for (int i = 0; i < degree; ++i) {
            int v = images[std::size_t(i)] - 1;
            if (v < 0 || v >= degree || seen[std::size_t(v)])
                throw InputError("permutation group: images are not a permutation");
            seen[std::size_t(v)] = true;
            p[std::size_t(i)] = v;
        }
        gen_perms.push_back(std::move(p));
    }

    // compose left-to-right: (p*q)(i) = q(p(i))
    auto compose = [&](const Perm& p, const Perm& q) {
        Perm r(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[std::size_t(p[i])];
        return r;
    };

    std::map<Perm, int> index;
    std::vector<Perm> elems{id};
    std::vector<std::vector<int>> words{{}};
    std::vector<std::string> names{"1"};
    index[id] = 0;
    std::queue<int> bfs;
    bfs.push(0);
    while (!bfs.empty()) {
        int cur = bfs.front();
        bfs.pop();
        for (std::size_t gi = 0; gi < gen_perms.size(); ++gi) {
            Perm nxt = compose(elems[std::size_t(cur)], gen_perms[gi]);
            if (index.count(nxt)) continue;
            int id_new = int(elems.size());
            index[nxt] = id_new;
            elems.push_back(nxt);
            auto w = words[std::size_t(cur)];
            w.push_back(int(gi));
            words.push_back(w);
            std::string nm = names[std::size_t(cur)] == "1" ? gens[gi].first
                                                            : names[std::size_t(cur)] + "*" + gens[gi].first;
            names.push_back(nm);
            bfs.push(id_new);
        }
    }

    int n = int(elems.size());
    FiniteGroup g;
    g.table_.assign(std::size_t(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            g.table_[std::size_t(a) * n + b] = index.at(compose(elems[std::size_t(a)], elems[std::size_t(b)]));
    g.names_ = std::move(names);
    g.words_ = std::move(words);
    for (std::size_t gi = 0; gi < gen_perms.size(); ++gi) g.gens_.push_back(index.at(gen_perms[gi]));
    g.finish();
    return g;
}

FiniteGroup FiniteGroup::symmetric3() {
    return from_permutations(3, {{"s", {2, 1, 3}}, {"c", {2, 3, 1}}});
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, std::vector<std::string> names) {
    int n = int(table.size());
    if (n < 1) throw InputError("group table: empty");
    FiniteGroup g;
    g.table_.assign(std::size_t(n) * n, 0);
    for (int a = 0; a < n; ++a) {
        if (int(table[std::size_t(a)].size()) != n) throw InputError("group table: not square");
        for (int b = 0; b < n; ++b) {
            int v = table[std::size_t(a)][std::size_t(b)];
            if (v < 0 || v >= n) throw InputError("group table: entry out of range");
            g.table_[std::size_t(a) * n + b] = v;
        }
    }
    if (names.empty()) {
        names.resize(std::size_t(n));
        for (int a = 0; a < n; ++a) names[std::size_t(a)] = "g" + std::to_string(a);
        names[0] = "1";
    }
    if (int(names.size()) != n) throw InputError("group table: bad name count");
    g.names_ = std::move(names);
    g.finish();
    return g;
}

}  // namespace cupcube
