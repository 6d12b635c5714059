#include "cupcube/intmat.hpp"

namespace cupcube {

IntMat IntMat::mul(const IntMat& b) const {
    assert(cols_ == b.rows_);
    // 128-bit accumulation; narrowing back to 64 bits is checked.
    IntMat r(rows_, b.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) {
            i128 acc = 0;
            for (int k = 0; k < cols_; ++k) {
                i128 term;
                if (__builtin_mul_overflow(i128((*this)(i, k)), i128(b(k, j)), &term) ||
                    __builtin_add_overflow(acc, term, &acc))
                    throw ComputeError("integer overflow in matrix product");
            }
            if (acc > i128(INT64_MAX) || acc < i128(INT64_MIN))
                throw ComputeError("matrix product entry exceeds 64 bits");
            r(i, j) = i64(acc);
        }
    return r;
}

IntMat IntMat::mul_mod(const IntMat& b, i64 n) const {
    assert(cols_ == b.rows_);
    IntMat r(rows_, b.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            i64 v = mod_reduce((*this)(i, k), n);
            if (v == 0) continue;
            for (int j = 0; j < b.cols_; ++j)
                r(i, j) = mod_reduce(r(i, j) + mod_mul(v, b(k, j), n), n);
        }
    return r;
}

IntMat IntMat::add_mod(const IntMat& b, i64 n) const {
    assert(rows_ == b.rows_ && cols_ == b.cols_);
    IntMat r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(i, j) = mod_reduce((*this)(i, j) + b(i, j), n);
    return r;
}

IntMat IntMat::sub_mod(const IntMat& b, i64 n) const {
    assert(rows_ == b.rows_ && cols_ == b.cols_);
    IntMat r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(i, j) = mod_reduce((*this)(i, j) - b(i, j), n);
    return r;
}

IntMat IntMat::scaled_mod(i64 s, i64 n) const {
    IntMat r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(i, j) = mod_mul((*this)(i, j), s, n);
    return r;
}

IntMat IntMat::transposed() const {
    IntMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

IntMat IntMat::pow_mod(u64 e, i64 n) const {
    assert(rows_ == cols_);
    IntMat base = *this;
    base.reduce_mod(n);
    IntMat acc = IntMat::identity(rows_);
    while (e > 0) {
        if (e & 1) acc = acc.mul_mod(base, n);
        base = base.mul_mod(base, n);
        e >>= 1;
    }
    return acc;
}

Vec vec_mat_mul_mod(const Vec& x, const IntMat& a, i64 n) {
    assert(int(x.size()) == a.rows());
    Vec r(a.cols(), 0);
    for (int i = 0; i < a.rows(); ++i) {
        i64 v = mod_reduce(x[i], n);
        if (v == 0) continue;
        for (int j = 0; j < a.cols(); ++j)
            r[j] = mod_reduce(r[j] + mod_mul(v, a(i, j), n), n);
    }
    return r;
}

Vec vec_add_mod(const Vec& x, const Vec& y, i64 n) {
    assert(x.size() == y.size());
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = mod_reduce(x[i] + y[i], n);
    return r;
}

Vec vec_sub_mod(const Vec& x, const Vec& y, i64 n) {
    assert(x.size() == y.size());
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = mod_reduce(x[i] - y[i], n);
    return r;
}

Vec vec_scaled_mod(const Vec& x, i64 s, i64 n) {
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = mod_mul(x[i], s, n);
    return r;
}

bool vec_is_zero(const Vec& x) {
    for (i64 v : x) if (v != 0) return false;
    return true;
}

i64 det_exact(IntMat m) {
    assert(m.rows() == m.cols());
    const int n = m.rows();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination in __int128, checked at the end.
    std::vector<i128> a(std::size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[std::size_t(i) * n + j] = m(i, j);
    i128 sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[std::size_t(k) * n + k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[std::size_t(i) * n + k] != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a[std::size_t(k) * n + j], a[std::size_t(p) * n + j]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                i128 num = a[std::size_t(i) * n + j] * a[std::size_t(k) * n + k] -
                           a[std::size_t(i) * n + k] * a[std::size_t(k) * n + j];
                a[std::size_t(i) * n + j] = num / prev;
            }
        prev = a[std::size_t(k) * n + k];
    }
    i128 d = sign * a[std::size_t(n - 1) * n + (n - 1)];
    if (d > i128(INT64_MAX) || d < i128(INT64_MIN)) throw ComputeError("determinant overflow");
    return i64(d);
}

}  // namespace cupcube
