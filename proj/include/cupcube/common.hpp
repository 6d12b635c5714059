#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cupcube {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

// Input that fails validation (bad PD code, bad descriptor, bad site).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal invariant broken or checked arithmetic failed.
struct ComputeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw ComputeError("integer overflow in add");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw ComputeError("integer overflow in sub");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw ComputeError("integer overflow in mul");
    return r;
}

inline i64 gcd_i64(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// g = gcd(a,b) together with x,y such that a*x + b*y = g.
inline i64 egcd_i64(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) {
        x = a < 0 ? -1 : 1;
        y = 0;
        return a < 0 ? -a : a;
    }
    i64 x1, y1;
    i64 g = egcd_i64(b, a % b, x1, y1);
    x = y1;
    y = checked_sub(x1, checked_mul(a / b, y1));
    return g;
}

// Reduce into [0, n).  n >= 1.
inline i64 mod_reduce(i64 a, i64 n) {
    i64 r = a % n;
    if (r < 0) r += n;
    return r;
}

inline i64 mod_mul(i64 a, i64 b, i64 n) {
    return mod_reduce(i64((i128(a) * i128(b)) % i128(n)), n);
}

// Inverse of a mod n; throws if not a unit.
inline i64 mod_inv(i64 a, i64 n) {
    i64 x, y;
    i64 g = egcd_i64(mod_reduce(a, n), n, x, y);
    if (g != 1) throw ComputeError("not a unit mod n");
    return mod_reduce(x, n);
}

std::string u128_to_string(u128 v);

// Splitmix-style deterministic generator; fixed seeds keep sampled
// comparisons byte-reproducible across platforms.
class Rng {
  public:
    explicit Rng(u64 seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}
    u64 next() {
        u64 z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Uniform in [0, bound), bound >= 1.
    u64 below(u64 bound) { return next() % bound; }
    i64 range(i64 lo, i64 hi) { return lo + i64(below(u64(hi - lo + 1))); }

  private:
    u64 state_;
};

// Runs fn(i) for i in [0,count); honours CUPCUBE_THREADS (default 1).
// Deterministic output is the caller's job: workers write disjoint slots.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace cupcube
