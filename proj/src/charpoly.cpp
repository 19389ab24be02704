#include "starcat/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace starcat {

std::vector<BigInt> char_poly_berkowitz(const std::vector<std::vector<BigInt>>& m) {
    const size_t n = m.size();
    std::vector<BigInt> v = {BigInt(1)};
    for (size_t i = 0; i < n; ++i) {
        // principal submatrix of size i+1; row i / column i against the
        // leading i x i block
        std::vector<BigInt> t(i + 2);
        t[0] = 1;
        t[1] = -m[i][i];
        std::vector<BigInt> w(i);
        for (size_t r = 0; r < i; ++r) w[r] = m[r][i];
        for (size_t k = 2; k <= i + 1; ++k) {
            BigInt dot = 0;
            for (size_t r = 0; r < i; ++r) dot += m[i][r] * w[r];
            t[k] = -dot;
            if (k <= i) {
                std::vector<BigInt> w2(i, BigInt(0));
                for (size_t r = 0; r < i; ++r) {
                    if (w[r] == 0) continue;
                    for (size_t s = 0; s < i; ++s) w2[s] += m[s][r] * w[r];
                }
                w.swap(w2);
            }
        }
        std::vector<BigInt> nv(i + 2, BigInt(0));
        for (size_t d = 0; d < nv.size(); ++d)
            for (size_t k = 0; k <= d && k < t.size(); ++k)
                if (d - k < v.size()) nv[d] += t[k] * v[d - k];
        v.swap(nv);
    }
    return v;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<u128>(a) * b) % p); }

u64 powmod_(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_(r, a, p);
        a = mulmod_(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

// char poly mod p via similarity reduction to Hessenberg form followed by
// the standard leading-minor recurrence. Descending powers, monic.
std::vector<u64> char_poly_mod(const std::vector<std::vector<BigInt>>& m, u64 p) {
    const size_t n = m.size();
    std::vector<std::vector<u64>> h(n, std::vector<u64>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            BigInt v = m[i][j] % BigInt(static_cast<unsigned long>(p));
            if (v < 0) v += BigInt(static_cast<unsigned long>(p));
            h[i][j] = v.get_ui();
        }
    for (size_t k = 0; k + 2 < n; ++k) {
        size_t piv = 0;
        for (size_t r = k + 1; r < n; ++r)
            if (h[r][k] != 0) {
                piv = r;
                break;
            }
        if (piv == 0) continue;
        if (piv != k + 1) {
            std::swap(h[piv], h[k + 1]);
            for (size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][k + 1]);
        }
        const u64 inv = powmod_(h[k + 1][k], p - 2, p);
        for (size_t r = k + 2; r < n; ++r) {
            if (h[r][k] == 0) continue;
            const u64 f = mulmod_(h[r][k], inv, p);
            for (size_t c = k; c < n; ++c) h[r][c] = submod(h[r][c], mulmod_(f, h[k + 1][c], p), p);
            // similarity: add f times row r back into column k+1
            for (size_t r2 = 0; r2 < n; ++r2)
                h[r2][k + 1] = (h[r2][k + 1] + mulmod_(f, h[r2][r], p)) % p;
        }
    }
    // p_0 = 1; p_k from the Hessenberg expansion, ascending-index polys kept
    // in descending-power coefficient form.
    std::vector<std::vector<u64>> polys(n + 1);
    polys[0] = {1};
    for (size_t k = 1; k <= n; ++k) {
        const auto& prev = polys[k - 1];
        std::vector<u64> cur(k + 1, 0);
        // (lambda - h[k-1][k-1]) * prev
        for (size_t d = 0; d < prev.size(); ++d) {
            cur[d] = (cur[d] + prev[d]) % p;
            cur[d + 1] = submod(cur[d + 1], mulmod_(h[k - 1][k - 1], prev[d], p), p);
        }
        u64 beta = 1;
        for (size_t i = k - 1; i-- > 0;) {
            beta = mulmod_(beta, h[i + 1][i], p);
            if (beta == 0) break;
            const u64 coef = mulmod_(h[i][k - 1], beta, p);
            if (coef == 0) continue;
            const auto& pi = polys[i];
            const size_t off = k - pi.size() + 1;  // align degrees
            for (size_t d = 0; d < pi.size(); ++d)
                cur[off + d] = submod(cur[off + d], mulmod_(coef, pi[d], p), p);
        }
        polys[k] = std::move(cur);
    }
    return polys[n];
}

}  // namespace

std::vector<BigInt> char_poly_modular(const std::vector<std::vector<BigInt>>& m) {
    const size_t n = m.size();
    if (n == 0) return {BigInt(1)};
    // per-coefficient bound: |c_k| <= C(n,k) * prod of the k largest row norms
    std::vector<double> lognorm(n);
    for (size_t i = 0; i < n; ++i) {
        double s = 0;
        for (size_t j = 0; j < n; ++j) {
            const double v = mpz_get_d(m[i][j].get_mpz_t());
            s += v * v;
        }
        lognorm[i] = 0.5 * std::log2(std::max(s, 1.0));
    }
    std::sort(lognorm.rbegin(), lognorm.rend());
    double maxbits = 1.0, acc = 0.0;
    for (size_t k = 1; k <= n; ++k) {
        acc += lognorm[k - 1];
        // log2 C(n,k) <= n
        maxbits = std::max(maxbits, static_cast<double>(n) + acc);
    }
    maxbits += 16;  // safety margin, incl. sign bit for the symmetric lift

    const double prime_bits = 61.9;
    const int nprimes = static_cast<int>(maxbits / prime_bits) + 1;

    std::vector<std::vector<u64>> residues(nprimes);
    std::vector<u64> primes(nprimes);
    for (int i = 0; i < nprimes; ++i) {
        primes[i] = nth_modular_prime(i);
        residues[i] = char_poly_mod(m, primes[i]);
    }
    // CRT per coefficient, symmetric lift
    std::vector<BigInt> out(n + 1);
    BigInt modulus_all = 1;
    for (int i = 0; i < nprimes; ++i) modulus_all *= BigInt(static_cast<unsigned long>(primes[i]));
    for (size_t c = 0; c <= n; ++c) {
        BigInt x = 0, mod = 1;
        for (int i = 0; i < nprimes; ++i) {
            const BigInt pi(static_cast<unsigned long>(primes[i]));
            BigInt cur = x % pi;
            if (cur < 0) cur += pi;
            u64 delta = submod(residues[i][c], cur.get_ui() % primes[i], primes[i]);
            BigInt minv = mod % pi;
            const u64 inv = powmod_(minv.get_ui(), primes[i] - 2, primes[i]);
            x += mod * BigInt(static_cast<unsigned long>(mulmod_(delta, inv, primes[i])));
            mod *= pi;
        }
        if (x * 2 > modulus_all) x -= modulus_all;
        out[c] = x;
    }
    return out;
}

std::vector<Rational> char_poly_exact(const SymmetricRationalMatrix& m) {
    const int n = m.dim;
    BigInt den = 1;
    for (const auto& e : m.entries) {
        BigInt l;
        mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), e.get_den().get_mpz_t());
        den = l;
    }
    std::vector<std::vector<BigInt>> z(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rational& e = m.at(i, j);
            z[i][j] = e.get_num() * (den / e.get_den());
        }
    const std::vector<BigInt> zp = (n <= 30) ? char_poly_berkowitz(z) : char_poly_modular(z);
    // det(lambda I - M) = D^-n sum zp[i] (D lambda)^{n-i}
    std::vector<Rational> out(n + 1);
    for (int i = 0; i <= n; ++i) {
        BigInt dpow;
        mpz_pow_ui(dpow.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(i));
        Rational r(zp[i], dpow);
        r.canonicalize();
        out[i] = r;
    }
    return out;
}

std::vector<Rational> expand_from_roots(const std::vector<std::pair<Rational, long>>& roots) {
    std::vector<Rational> poly = {Rational(1)};
    for (const auto& [root, mult] : roots)
        for (long t = 0; t < mult; ++t) {
            std::vector<Rational> next(poly.size() + 1, Rational(0));
            for (size_t i = 0; i < poly.size(); ++i) {
                next[i] += poly[i];
                next[i + 1] -= root * poly[i];
            }
            poly.swap(next);
        }
    return poly;
}

}  // namespace starcat
