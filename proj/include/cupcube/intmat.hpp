#pragma once

#include <cassert>
#include <initializer_list>

#include "cupcube/common.hpp"

namespace cupcube {

// Dense integer matrix with checked arithmetic.  Also used for matrices
// over Z/n (entries kept reduced, modulus passed per operation).
class IntMat {
  public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0) {}
    IntMat(std::initializer_list<std::initializer_list<i64>> init) {
        rows_ = int(init.size());
        cols_ = rows_ ? int(init.begin()->size()) : 0;
        a_.reserve(std::size_t(rows_) * cols_);
        for (auto& row : init) {
            assert(int(row.size()) == cols_);
            for (i64 v : row) a_.push_back(v);
        }
    }

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    i64& operator()(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
    i64 operator()(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }
    bool operator==(const IntMat& o) const = default;

    bool is_zero() const {
        for (i64 v : a_) if (v != 0) return false;
        return true;
    }

    IntMat mul(const IntMat& b) const;              // checked integer product
    IntMat mul_mod(const IntMat& b, i64 n) const;   // product reduced mod n
    IntMat add_mod(const IntMat& b, i64 n) const;
    IntMat sub_mod(const IntMat& b, i64 n) const;
    IntMat scaled_mod(i64 s, i64 n) const;
    IntMat transposed() const;
    void reduce_mod(i64 n) {
        for (i64& v : a_) v = mod_reduce(v, n);
    }

    IntMat pow_mod(u64 e, i64 n) const;

  private:
    int rows_, cols_;
    std::vector<i64> a_;
};

using Vec = std::vector<i64>;  // row vector over Z or Z/n

Vec vec_mat_mul_mod(const Vec& x, const IntMat& a, i64 n);
Vec vec_add_mod(const Vec& x, const Vec& y, i64 n);
Vec vec_sub_mod(const Vec& x, const Vec& y, i64 n);
Vec vec_scaled_mod(const Vec& x, i64 s, i64 n);
bool vec_is_zero(const Vec& x);

// Exact determinant (Bareiss, checked); square matrices only.
i64 det_exact(IntMat m);

}  // namespace cupcube
