#include "cupcube/snf.hpp"

#include <algorithm>
#include <numeric>

namespace cupcube {

namespace {

// g = gcd(a,b) with a*x + b*y = g, g >= 0.
BigInt egcd_big(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
    BigInt r0 = a, r1 = b;
    BigInt x0(1), x1(0), y0(0), y1(1);
    while (!r1.is_zero()) {
        BigInt q, r;
        BigInt::divmod(r0, r1, q, r);
        r0 = r1;
        r1 = r;
        BigInt xn = x0 - q * x1, yn = y0 - q * y1;
        x0 = x1;
        x1 = xn;
        y0 = y1;
        y1 = yn;
    }
    if (r0.sign() < 0) {
        r0 = -r0;
        x0 = -x0;
        y0 = -y0;
    }
    x = x0;
    y = y0;
    return r0;
}

// Elementary operations applied to S while maintaining S = U*A*V,
// U*Uinv = I and V*Vinv = I.
struct Worker {
    BigMat s, u, uinv, v, vinv;

    void row_swap(int i, int j) {
        for (int c = 0; c < s.cols(); ++c) std::swap(s(i, c), s(j, c));
        for (int c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
        for (int r = 0; r < uinv.rows(); ++r) std::swap(uinv(r, i), uinv(r, j));
    }
    void col_swap(int i, int j) {
        for (int r = 0; r < s.rows(); ++r) std::swap(s(r, i), s(r, j));
        for (int r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
        for (int c = 0; c < vinv.cols(); ++c) std::swap(vinv(i, c), vinv(j, c));
    }
    void row_negate(int i) {
        for (int c = 0; c < s.cols(); ++c) s(i, c) = -s(i, c);
        for (int c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
        for (int r = 0; r < uinv.rows(); ++r) uinv(r, i) = -uinv(r, i);
    }
    // row i += k * row j
    void row_add(int i, int j, const BigInt& k) {
        if (k.is_zero()) return;
        for (int c = 0; c < s.cols(); ++c) s(i, c) = s(i, c) + k * s(j, c);
        for (int c = 0; c < u.cols(); ++c) u(i, c) = u(i, c) + k * u(j, c);
        for (int r = 0; r < uinv.rows(); ++r) uinv(r, j) = uinv(r, j) - k * uinv(r, i);
    }
    // col i += k * col j
    void col_add(int i, int j, const BigInt& k) {
        if (k.is_zero()) return;
        for (int r = 0; r < s.rows(); ++r) s(r, i) = s(r, i) + k * s(r, j);
        for (int r = 0; r < v.rows(); ++r) v(r, i) = v(r, i) + k * v(r, j);
        for (int c = 0; c < vinv.cols(); ++c) vinv(j, c) = vinv(j, c) - k * vinv(i, c);
    }

    // rows (i,j) <- [[m00, m01], [m10, m11]] * (rows i,j); det = +-1.
    void apply_row_pair(int i, int j, const BigInt& m00, const BigInt& m01, const BigInt& m10,
                        const BigInt& m11) {
        BigInt det = m00 * m11 - m01 * m10;
        auto upd = [&](BigMat& m) {
            for (int c = 0; c < m.cols(); ++c) {
                BigInt a = m(i, c), b = m(j, c);
                m(i, c) = m00 * a + m01 * b;
                m(j, c) = m10 * a + m11 * b;
            }
        };
        upd(s);
        upd(u);
        // Uinv <- Uinv * inverse; inverse = det * adjugate since det = +-1.
        BigInt n00 = det * m11, n01 = -(det * m01), n10 = -(det * m10), n11 = det * m00;
        for (int r = 0; r < uinv.rows(); ++r) {
            BigInt a = uinv(r, i), b = uinv(r, j);
            uinv(r, i) = a * n00 + b * n10;
            uinv(r, j) = a * n01 + b * n11;
        }
    }
    void apply_col_pair(int i, int j, const BigInt& m00, const BigInt& m01, const BigInt& m10,
                        const BigInt& m11) {
        BigInt det = m00 * m11 - m01 * m10;
        auto upd = [&](BigMat& m) {
            for (int r = 0; r < m.rows(); ++r) {
                BigInt a = m(r, i), b = m(r, j);
                m(r, i) = m00 * a + m01 * b;
                m(r, j) = m10 * a + m11 * b;
            }
        };
        upd(s);
        upd(v);
        BigInt n00 = det * m11, n01 = -(det * m01), n10 = -(det * m10), n11 = det * m00;
        for (int c = 0; c < vinv.cols(); ++c) {
            BigInt a = vinv(i, c), b = vinv(j, c);
            vinv(i, c) = n00 * a + n10 * b;
            vinv(j, c) = n01 * a + n11 * b;
        }
    }

    // One-shot Blankinship step: afterwards s(p,p) = gcd and s(i,p) = 0.
    void row_gcd_step(int p, int i) {
        BigInt x, y;
        BigInt a = s(p, p), b = s(i, p);
        BigInt g = egcd_big(a, b, x, y);
        apply_row_pair(p, i, x, y, -(b / g), a / g);
    }
    void col_gcd_step(int p, int j) {
        BigInt x, y;
        BigInt a = s(p, p), b = s(p, j);
        BigInt g = egcd_big(a, b, x, y);
        apply_col_pair(p, j, x, y, -(b / g), a / g);
    }
};

}  // namespace

SnfResult snf(const IntMat& a) {
    const int r = a.rows(), c = a.cols();
    Worker w{BigMat::from(a), BigMat::identity(r), BigMat::identity(r), BigMat::identity(c),
             BigMat::identity(c)};
    const int nmin = std::min(r, c);

    for (int p = 0; p < nmin; ++p) {
        for (;;) {
            // Smallest nonzero |entry| in the trailing block becomes the pivot.
            int pi = -1, pj = -1;
            BigInt best;
            for (int i = p; i < r; ++i)
                for (int j = p; j < c; ++j) {
                    BigInt v = w.s(i, j).abs();
                    if (!v.is_zero() && (pi < 0 || v < best)) {
                        best = v;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) goto done;  // trailing block is zero
            if (pi != p) w.row_swap(p, pi);
            if (pj != p) w.col_swap(p, pj);

            for (int i = p + 1; i < r; ++i)
                if (!w.s(i, p).is_zero()) {
                    if ((w.s(i, p) % w.s(p, p)).is_zero())
                        w.row_add(i, p, -BigInt::balanced_quot(w.s(i, p), w.s(p, p)));
                    else
                        w.row_gcd_step(p, i);
                }
            for (int j = p + 1; j < c; ++j)
                if (!w.s(p, j).is_zero()) {
                    if ((w.s(p, j) % w.s(p, p)).is_zero())
                        w.col_add(j, p, -BigInt::balanced_quot(w.s(p, j), w.s(p, p)));
                    else
                        w.col_gcd_step(p, j);
                }
            bool clean = true;
            for (int i = p + 1; i < r && clean; ++i)
                if (!w.s(i, p).is_zero()) clean = false;
            if (!clean) continue;

            // Pivot must divide the rest of the block for the chain d1|d2|...
            int bi = -1;
            for (int i = p + 1; i < r && bi < 0; ++i)
                for (int j = p + 1; j < c; ++j)
                    if (!(w.s(i, j) % w.s(p, p)).is_zero()) {
                        bi = i;
                        break;
                    }
            if (bi < 0) break;
            w.row_add(p, bi, BigInt(1));
        }
        if (w.s(p, p).sign() < 0) w.row_negate(p);
    }
done:
    for (int p = 0; p < nmin; ++p)
        if (w.s(p, p).sign() < 0) w.row_negate(p);
    return SnfResult{std::move(w.u), std::move(w.uinv), std::move(w.v), std::move(w.vinv),
                     std::move(w.s)};
}

ModuleBasis kernel_mod(const IntMat& a, i64 n) {
    if (n < 1) throw InputError("kernel_mod: modulus must be >= 1");
    SnfResult f = snf(a);
    const int r = a.rows();
    const int nd = f.diag_count();
    IntMat u_mod = f.u.mod(n);

    ModuleBasis b;
    b.ambient_ = r;
    b.n_ = n;
    b.uinv_ = f.uinv.mod(n);
    b.zorder_.assign(std::size_t(r), 0);
    b.zto_gen_.assign(std::size_t(r), -1);

    struct G {
        Vec vec;
        i64 ord;
        int zidx;
    };
    std::vector<G> raw;
    for (int i = 0; i < r; ++i) {
        // order of the i-th cyclic factor: gcd(s_i, n), with s_i = 0 giving n
        i64 d = gcd_i64((i < nd) ? f.diag(i).mod_i64(n) : 0, n);
        if (d == 0) d = n;
        b.zorder_[std::size_t(i)] = d;
        if (n == 1 || d == 1) continue;
        // z-generator (n/d) * e_i mapped back through x = z * U.
        Vec x(std::size_t(r), 0);
        i64 scale = n / d;
        for (int j = 0; j < r; ++j) x[std::size_t(j)] = mod_mul(scale, u_mod(i, j), n);
        raw.push_back({std::move(x), d, i});
    }

    // Deterministic presentation: sort generators by (order, lex vector).
    std::vector<int> perm(raw.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int x, int y) {
        if (raw[std::size_t(x)].ord != raw[std::size_t(y)].ord)
            return raw[std::size_t(x)].ord < raw[std::size_t(y)].ord;
        return raw[std::size_t(x)].vec < raw[std::size_t(y)].vec;
    });
    for (std::size_t k = 0; k < perm.size(); ++k) {
        const G& g = raw[std::size_t(perm[k])];
        b.gens_.push_back(g.vec);
        b.orders_.push_back(g.ord);
        b.zto_gen_[std::size_t(g.zidx)] = int(k);
    }
    return b;
}

Vec ModuleBasis::element(const std::vector<i64>& coeffs) const {
    if (int(coeffs.size()) != rank()) throw InputError("ModuleBasis::element: bad coefficient count");
    Vec x(std::size_t(ambient_), 0);
    for (int i = 0; i < rank(); ++i) {
        i64 c = mod_reduce(coeffs[std::size_t(i)], orders_[std::size_t(i)]);
        if (c == 0) continue;
        for (int j = 0; j < ambient_; ++j)
            x[std::size_t(j)] =
                mod_reduce(x[std::size_t(j)] + mod_mul(c, gens_[std::size_t(i)][std::size_t(j)], n_), n_);
    }
    return x;
}

std::optional<std::vector<i64>> ModuleBasis::coords(const Vec& x) const {
    if (int(x.size()) != ambient_) return std::nullopt;
    if (n_ == 1) return std::vector<i64>(std::size_t(rank()), 0);
    Vec z = vec_mat_mul_mod(x, uinv_, n_);
    std::vector<i64> coeffs(std::size_t(rank()), 0);
    for (int i = 0; i < ambient_; ++i) {
        i64 d = zorder_[std::size_t(i)];
        if (d == 1) {
            if (z[std::size_t(i)] != 0) return std::nullopt;
            continue;
        }
        i64 step = n_ / d;
        if (z[std::size_t(i)] % step != 0) return std::nullopt;
        coeffs[std::size_t(zto_gen_[std::size_t(i)])] = mod_reduce(z[std::size_t(i)] / step, d);
    }
    return coeffs;
}

void ModuleBasis::enumerate(u64 budget, const std::function<void(const Vec&)>& fn) const {
    u128 card = cardinality();
    if (card > u128(budget)) throw ComputeError("ModuleBasis::enumerate: budget exceeded");
    std::vector<i64> coeffs(std::size_t(rank()), 0);
    for (;;) {
        fn(element(coeffs));
        int i = 0;
        while (i < rank()) {
            if (++coeffs[std::size_t(i)] < orders_[std::size_t(i)]) break;
            coeffs[std::size_t(i)] = 0;
            ++i;
        }
        if (i == rank()) return;
    }
}

std::optional<Vec> solve_mod(const IntMat& a, const Vec& b, i64 n) {
    if (n < 1) throw InputError("solve_mod: modulus must be >= 1");
    if (int(b.size()) != a.cols()) throw InputError("solve_mod: size mismatch");
    SnfResult f = snf(a);
    // x*A = b  <=>  z*S = b*V  with x = z*U.
    Vec c = vec_mat_mul_mod(b, f.v.mod(n), n);
    const int r = a.rows();
    Vec z(std::size_t(r), 0);
    for (int j = 0; j < a.cols(); ++j) {
        bool have_diag = j < f.diag_count() && !f.diag(j).is_zero();
        if (!have_diag) {
            if (c[std::size_t(j)] != 0) return std::nullopt;
            continue;
        }
        // z_j * s_j = c_j (mod n)
        i64 g = gcd_i64(f.diag(j).mod_i64(n), n);
        if (g == 0) g = n;
        if (c[std::size_t(j)] % g != 0) return std::nullopt;
        i64 nn = n / g;
        if (nn == 1) continue;
        i64 s_over_g = (f.diag(j) / BigInt(g)).mod_i64(nn);
        z[std::size_t(j)] = mod_mul(mod_reduce(c[std::size_t(j)] / g, nn), mod_inv(s_over_g, nn), nn);
    }
    Vec x = vec_mat_mul_mod(z, f.u.mod(n), n);
    Vec check = vec_mat_mul_mod(x, a, n);
    for (std::size_t j = 0; j < check.size(); ++j)
        if (check[j] != mod_reduce(b[j], n)) return std::nullopt;
    return x;
}

}  // namespace cupcube
