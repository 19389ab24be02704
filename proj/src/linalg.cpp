#include "starcat/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace starcat {

SignatureResult exact_signature(const SymmetricRationalMatrix& m) {
    SymmetricRationalMatrix a = m;
    const int n = a.dim;
    std::vector<int> live(n);
    for (int i = 0; i < n; ++i) live[i] = i;
    SignatureResult res;

    while (!live.empty()) {
        int piv = -1;
        for (size_t t = 0; t < live.size(); ++t) {
            const int i = live[t];
            if (a.at(i, i) != 0) {
                piv = static_cast<int>(t);
                break;
            }
        }
        if (piv >= 0) {
            const int p = live[piv];
            const Rational d = a.at(p, p);
            (sgn(d) > 0 ? res.positives : res.negatives) += 1;
            live.erase(live.begin() + piv);
            for (size_t s = 0; s < live.size(); ++s) {
                const int i = live[s];
                if (a.at(i, p) == 0) continue;
                const Rational f = a.at(i, p) / d;
                for (size_t t = s; t < live.size(); ++t) {
                    const int j = live[t];
                    const Rational v = a.at(i, j) - f * a.at(p, j);
                    a.set_sym(i, j, v);
                }
            }
            continue;
        }
        // all remaining diagonal entries vanish; look for a hyperbolic pair
        int hi = -1, hj = -1;
        for (size_t s = 0; s + 1 < live.size() && hi < 0; ++s)
            for (size_t t = s + 1; t < live.size(); ++t)
                if (a.at(live[s], live[t]) != 0) {
                    hi = static_cast<int>(s);
                    hj = static_cast<int>(t);
                    break;
                }
        if (hi < 0) {
            res.zeros += static_cast<int>(live.size());
            break;
        }
        const int p = live[hi], q = live[hj];
        const Rational c = a.at(p, q);
        res.positives += 1;
        res.negatives += 1;
        live.erase(live.begin() + hj);
        live.erase(live.begin() + hi);
        for (size_t s = 0; s < live.size(); ++s) {
            const int i = live[s];
            const Rational fi_p = a.at(i, p), fi_q = a.at(i, q);
            if (fi_p == 0 && fi_q == 0) continue;
            for (size_t t = s; t < live.size(); ++t) {
                const int j = live[t];
                const Rational v =
                    a.at(i, j) - (fi_p * a.at(q, j) + fi_q * a.at(p, j)) / c;
                a.set_sym(i, j, v);
            }
        }
    }
    return res;
}

long rank_bareiss(std::vector<std::vector<Rational>> rows) {
    std::vector<std::vector<BigInt>> zrows;
    zrows.reserve(rows.size());
    for (auto& r : rows) {
        BigInt lcm = 1;
        for (auto& x : r) {
            BigInt l;
            mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
            lcm = l;
        }
        std::vector<BigInt> zr;
        zr.reserve(r.size());
        for (auto& x : r) zr.push_back(x.get_num() * (lcm / x.get_den()));
        zrows.push_back(std::move(zr));
    }
    return rank_bareiss_int(std::move(zrows));
}

long rank_bareiss_int(std::vector<std::vector<BigInt>> a) {
    if (a.empty()) return 0;
    const size_t nr = a.size(), nc = a[0].size();
    BigInt prev = 1;
    size_t rank = 0;
    for (size_t col = 0; col < nc && rank < nr; ++col) {
        size_t piv = nr;
        for (size_t r = rank; r < nr; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv == nr) continue;
        std::swap(a[rank], a[piv]);
        const BigInt d = a[rank][col];
        for (size_t r = rank + 1; r < nr; ++r) {
            for (size_t c = col + 1; c < nc; ++c)
                a[r][c] = (a[r][c] * d - a[r][col] * a[rank][c]) / prev;
            a[r][col] = 0;
        }
        prev = d;
        ++rank;
    }
    return static_cast<long>(rank);
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic for 64-bit with these bases
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace

std::uint64_t nth_modular_prime(int index) {
    static std::vector<std::uint64_t> cache;
    static std::uint64_t cursor = (1ull << 62) + 1;
    while (static_cast<int>(cache.size()) <= index) {
        while (!is_prime_u64(cursor)) cursor += 2;
        cache.push_back(cursor);
        cursor += 2;
    }
    return cache[index];
}

long rank_mod_p(const std::vector<std::vector<BigInt>>& rows, std::uint64_t p) {
    if (rows.empty()) return 0;
    const size_t nr = rows.size(), nc = rows[0].size();
    std::vector<std::vector<std::uint64_t>> a(nr, std::vector<std::uint64_t>(nc));
    for (size_t r = 0; r < nr; ++r)
        for (size_t c = 0; c < nc; ++c) {
            BigInt v = rows[r][c] % BigInt(static_cast<unsigned long>(p));
            if (v < 0) v += BigInt(static_cast<unsigned long>(p));
            a[r][c] = v.get_ui();
        }
    size_t rank = 0;
    for (size_t col = 0; col < nc && rank < nr; ++col) {
        size_t piv = nr;
        for (size_t r = rank; r < nr; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv == nr) continue;
        std::swap(a[rank], a[piv]);
        const std::uint64_t inv = powmod(a[rank][col], p - 2, p);
        for (size_t r = rank + 1; r < nr; ++r) {
            if (a[r][col] == 0) continue;
            const std::uint64_t f = mulmod(a[r][col], inv, p);
            for (size_t c = col; c < nc; ++c) {
                const std::uint64_t sub = mulmod(f, a[rank][c], p);
                a[r][c] = (a[r][c] >= sub) ? a[r][c] - sub : a[r][c] + p - sub;
            }
        }
        ++rank;
    }
    return static_cast<long>(rank);
}

}  // namespace starcat
