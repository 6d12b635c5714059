#include "cupcube/quotring.hpp"

#include "cupcube/snf.hpp"

#include <sstream>

namespace cupcube {

QuotRing::QuotRing(i64 n, Vec p) : n_(n), p_(std::move(p)) {
    if (n_ < 1) throw InputError("QuotRing: modulus must be >= 1");
    if (p_.size() < 2) throw InputError("QuotRing: p(t) must have degree >= 1");
    if (p_.back() != 1) throw InputError("QuotRing: p(t) must be monic");
    for (i64& c : p_) c = mod_reduce(c, n_);
    p_.back() = 1;
}

Vec QuotRing::one() const {
    Vec v = zero();
    v[0] = mod_reduce(1, n_);
    return v;
}

Vec QuotRing::t() const {
    Vec v = zero();
    if (deg() == 1) {
        // t == -p0 in Z[t]/(n, t + p0); for p(t)=t this is 0.
        v[0] = mod_reduce(-p_[0], n_);
    } else {
        v[1] = mod_reduce(1, n_);
    }
    return v;
}

Vec QuotRing::from_int(i64 c) const {
    Vec v = zero();
    v[0] = mod_reduce(c, n_);
    return v;
}

Vec QuotRing::mul(const Vec& a, const Vec& b) const {
    const int d = deg();
    if (int(a.size()) != d || int(b.size()) != d) throw InputError("QuotRing::mul: wrong ring");
    std::vector<i64> prod(std::size_t(2 * d - 1), 0);
    for (int i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < d; ++j)
            prod[std::size_t(i + j)] = mod_reduce(prod[std::size_t(i + j)] + mod_mul(a[i], b[j], n_), n_);
    }
    // Reduce by the monic p(t): t^k = -(p0 t^{k-d} + ... + p_{d-1} t^{k-1}).
    for (int k = 2 * d - 2; k >= d; --k) {
        i64 c = prod[std::size_t(k)];
        if (c == 0) continue;
        prod[std::size_t(k)] = 0;
        for (int j = 0; j < d; ++j)
            prod[std::size_t(k - d + j)] =
                mod_reduce(prod[std::size_t(k - d + j)] - mod_mul(c, p_[std::size_t(j)], n_), n_);
    }
    prod.resize(std::size_t(d));
    return prod;
}

Vec QuotRing::pow(const Vec& a, u64 e) const {
    Vec acc = one(), base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

IntMat QuotRing::mult_matrix(const Vec& a) const {
    const int d = deg();
    IntMat m(d, d);
    Vec basis(d, 0);
    for (int i = 0; i < d; ++i) {
        std::fill(basis.begin(), basis.end(), 0);
        basis[std::size_t(i)] = 1;
        Vec row = mul(basis, a);
        for (int j = 0; j < d; ++j) m(i, j) = row[std::size_t(j)];
    }
    return m;
}

std::optional<Vec> QuotRing::inverse(const Vec& a) const {
    // x * M_a = e0 over Z/n
    IntMat m = mult_matrix(a);
    Vec e0(std::size_t(deg()), 0);
    e0[0] = mod_reduce(1, n_);
    return solve_mod(m, e0, n_);
}

Vec QuotRing::galois(const Vec& a) const {
    Vec t2 = mul(t(), t());
    Vec acc = zero(), power = one();
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc = add(acc, mul_int(power, a[i]));
        power = mul(power, t2);
    }
    return acc;
}

std::vector<Vec> QuotRing::all_elements() const {
    std::vector<Vec> out;
    Vec cur = zero();
    for (;;) {
        out.push_back(cur);
        int i = 0;
        while (i < deg()) {
            if (++cur[std::size_t(i)] < n_) break;
            cur[std::size_t(i)] = 0;
            ++i;
        }
        if (i == deg()) break;
    }
    return out;
}

std::vector<Vec> QuotRing::units() const {
    std::vector<Vec> out;
    for (const Vec& v : all_elements())
        if (is_unit(v)) out.push_back(v);
    return out;
}

std::string QuotRing::show(const Vec& a) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if (!first) os << "+";
        if (i == 0) {
            os << a[i];
        } else {
            if (a[i] != 1) os << a[i] << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace cupcube
