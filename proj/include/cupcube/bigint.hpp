#pragma once

#include <cstdint>
#include <string>

#include "cupcube/intmat.hpp"

namespace cupcube {

// Sign-magnitude arbitrary-precision integer; just enough for exact Smith
// normal form transforms, where 64 bits is not always sufficient.
class BigInt {
  public:
    BigInt() : sign_(0) {}
    BigInt(i64 v);  // NOLINT(google-explicit-constructor)

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool fits_i64() const;
    i64 to_i64() const;  // throws if it does not fit
    i64 mod_i64(i64 n) const;  // value reduced into [0, n)

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    // Truncated division (C semantics): q = trunc(a/b), r = a - q*b.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;

    BigInt abs() const;
    static BigInt gcd(BigInt a, BigInt b);
    // Quotient with |a - q*b| <= |b|/2.
    static BigInt balanced_quot(const BigInt& a, const BigInt& b);

    std::string str() const;

  private:
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    void trim();

    int sign_;
    std::vector<std::uint32_t> mag_;  // little-endian limbs, no trailing zeros
};

// Dense matrix over BigInt, used for SNF transforms.
class BigMat {
  public:
    BigMat() : rows_(0), cols_(0) {}
    BigMat(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}
    static BigMat identity(int n);
    static BigMat from(const IntMat& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    BigInt& operator()(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
    const BigInt& operator()(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }
    bool operator==(const BigMat& o) const = default;

    BigMat mul(const BigMat& o) const;
    bool is_identity() const;
    IntMat mod(i64 n) const;   // entrywise reduction into [0, n)
    IntMat narrow() const;     // throws unless every entry fits in 64 bits

  private:
    int rows_, cols_;
    std::vector<BigInt> a_;
};

}  // namespace cupcube
