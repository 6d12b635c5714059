#include "cupcube/bigint.hpp"

#include <algorithm>

namespace cupcube {

BigInt::BigInt(i64 v) {
    if (v == 0) {
        sign_ = 0;
        return;
    }
    sign_ = v > 0 ? 1 : -1;
    u64 m = v > 0 ? u64(v) : (~u64(v) + 1);  // |v|, correct for INT64_MIN
    while (m > 0) {
        mag_.push_back(std::uint32_t(m & 0xffffffffu));
        m >>= 32;
    }
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

bool BigInt::fits_i64() const {
    if (mag_.size() > 2) return false;
    u64 m = 0;
    for (std::size_t i = 0; i < mag_.size(); ++i) m |= u64(mag_[i]) << (32 * i);
    if (sign_ >= 0) return m <= u64(INT64_MAX);
    return m <= u64(INT64_MAX) + 1;
}

i64 BigInt::to_i64() const {
    if (!fits_i64()) throw ComputeError("BigInt: value exceeds 64 bits");
    u64 m = 0;
    for (std::size_t i = 0; i < mag_.size(); ++i) m |= u64(mag_[i]) << (32 * i);
    return sign_ >= 0 ? i64(m) : -i64(m - 1) - 1;
}

i64 BigInt::mod_i64(i64 n) const {
    if (n < 1) throw InputError("BigInt::mod_i64: modulus must be >= 1");
    u64 r = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) r = u64(((u128(r) << 32) | mag_[i]) % u128(n));
    i64 v = i64(r);
    if (sign_ < 0 && v != 0) v = n - v;
    return v % n;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    u64 carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        u64 s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(std::uint32_t(s & 0xffffffffu));
        carry = s >> 32;
    }
    if (carry) r.push_back(std::uint32_t(carry));
    return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    // requires |a| >= |b|
    std::vector<std::uint32_t> r;
    r.reserve(a.size());
    i64 borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        i64 s = i64(a[i]) - borrow - (i < b.size() ? i64(b[i]) : 0);
        if (s < 0) {
            s += i64(1) << 32;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.push_back(std::uint32_t(s));
    }
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.sign_ = sign_;
        r.mag_ = add_mag(mag_, o.mag_);
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.sign_ = sign_;
            r.mag_ = sub_mag(mag_, o.mag_);
        } else {
            r.sign_ = o.sign_;
            r.mag_ = sub_mag(o.mag_, mag_);
        }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (sign_ == 0 || o.sign_ == 0) return BigInt();
    BigInt r;
    r.sign_ = sign_ * o.sign_;
    r.mag_.assign(mag_.size() + o.mag_.size(), 0);
    for (std::size_t i = 0; i < mag_.size(); ++i) {
        u64 carry = 0;
        for (std::size_t j = 0; j < o.mag_.size(); ++j) {
            u64 cur = u64(r.mag_[i + j]) + u64(mag_[i]) * u64(o.mag_[j]) + carry;
            r.mag_[i + j] = std::uint32_t(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + o.mag_.size();
        while (carry) {
            u64 cur = u64(r.mag_[k]) + carry;
            r.mag_[k] = std::uint32_t(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw ComputeError("BigInt: division by zero");
    int c = cmp_mag(a.mag_, b.mag_);
    if (a.sign_ == 0 || c < 0) {
        q = BigInt();
        r = a;
        return;
    }
    // binary long division on magnitudes
    std::size_t bits = a.mag_.size() * 32;
    std::vector<std::uint32_t> qm(a.mag_.size(), 0), rm;
    for (std::size_t bit = bits; bit-- > 0;) {
        // rm = (rm << 1) | bit_of_a
        std::uint32_t carry = (a.mag_[bit / 32] >> (bit % 32)) & 1u;
        for (std::size_t i = 0; i < rm.size(); ++i) {
            std::uint32_t nxt = rm[i] >> 31;
            rm[i] = (rm[i] << 1) | carry;
            carry = nxt;
        }
        if (carry) rm.push_back(carry);
        while (!rm.empty() && rm.back() == 0) rm.pop_back();
        if (cmp_mag(rm, b.mag_) >= 0) {
            rm = sub_mag(rm, b.mag_);
            while (!rm.empty() && rm.back() == 0) rm.pop_back();
            qm[bit / 32] |= (1u << (bit % 32));
        }
    }
    q.mag_ = std::move(qm);
    q.sign_ = a.sign_ * b.sign_;
    q.trim();
    r.mag_ = std::move(rm);
    r.sign_ = a.sign_;  // remainder keeps the dividend's sign (C semantics)
    r.trim();
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

bool BigInt::operator<(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_;
    int c = cmp_mag(mag_, o.mag_);
    return sign_ >= 0 ? c < 0 : c > 0;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

BigInt BigInt::balanced_quot(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    BigInt two_r = r.abs() + r.abs();
    if (cmp_mag(two_r.mag_, b.abs().mag_) > 0) q = q + BigInt((r.sign() < 0) == (b.sign() < 0) ? 1 : -1);
    return q;
}

std::string BigInt::str() const {
    if (sign_ == 0) return "0";
    BigInt ten(10), cur = abs(), q, r;
    std::string digits;
    while (!cur.is_zero()) {
        divmod(cur, ten, q, r);
        digits.push_back(char('0' + (r.is_zero() ? 0 : r.mag_[0])));
        cur = q;
    }
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigMat BigMat::identity(int n) {
    BigMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = BigInt(1);
    return m;
}

BigMat BigMat::from(const IntMat& src) {
    BigMat m(src.rows(), src.cols());
    for (int i = 0; i < src.rows(); ++i)
        for (int j = 0; j < src.cols(); ++j) m(i, j) = BigInt(src(i, j));
    return m;
}

BigMat BigMat::mul(const BigMat& o) const {
    if (cols_ != o.rows_) throw ComputeError("BigMat: dimension mismatch");
    BigMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const BigInt& v = (*this)(i, k);
            if (v.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) r(i, j) = r(i, j) + v * o(k, j);
        }
    return r;
}

bool BigMat::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if ((*this)(i, j) != BigInt(i == j ? 1 : 0)) return false;
    return true;
}

IntMat BigMat::mod(i64 n) const {
    IntMat m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).mod_i64(n);
    return m;
}

IntMat BigMat::narrow() const {
    IntMat m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).to_i64();
    return m;
}

}  // namespace cupcube
