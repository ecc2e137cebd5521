#include "prescount/util.hpp"

#include <algorithm>
#include <stdexcept>

namespace prescount::nt {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n <= 0) throw std::invalid_argument("factorize requires n > 0");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

int mobius(std::int64_t n) {
    int k = 0;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        ++k;
    }
    return (k % 2) ? -1 : 1;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    // extended Euclid
    std::int64_t r0 = m, r1 = ((a % m) + m) % m, s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1, s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1) throw std::invalid_argument("mod_inverse: not coprime");
    return ((s0 % m) + m) % m;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

Int pow_int(std::int64_t base, unsigned long e) {
    Int out, b(static_cast<long>(base));
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
    return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out{1};
    for (auto [p, e] : factorize(n)) {
        std::size_t sz = out.size();
        std::int64_t pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < sz; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace prescount::nt
