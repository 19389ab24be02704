#include "starcat/combinatorics.hpp"

#include <stdexcept>

namespace starcat {

BigInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt binomial(long n, long k) {
    if (k < 0) return 0;
    if (n >= 0) {
        if (k > n) return 0;
        BigInt r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                     static_cast<unsigned long>(k));
        return r;
    }
    // generalized: n(n-1)...(n-k+1)/k!
    BigInt num = 1;
    for (long i = 0; i < k; ++i) num *= BigInt(n - i);
    BigInt r = num / factorial(k);
    return r;
}

BigInt double_factorial(long x) {
    if (x < -1) throw std::invalid_argument("double_factorial: argument below -1");
    BigInt r = 1;
    for (long v = x; v >= 2; v -= 2) r *= v;
    return r;
}

std::vector<std::uint32_t> lex_subset_masks(int n, int k) {
    if (k < 0 || k > n || n > 31) throw std::invalid_argument("lex_subset_masks: bad arguments");
    std::vector<std::uint32_t> out;
    if (k == 0) {
        out.push_back(0u);
        return out;
    }
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        std::uint32_t mask = 0;
        for (int i : idx) mask |= (1u << i);
        out.push_back(mask);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace starcat
