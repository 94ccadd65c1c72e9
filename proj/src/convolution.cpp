#include "littlewood/convolution.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

namespace littlewood {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct NttPrime {
    u32 mod;
    u32 root;      // primitive root of the multiplicative group
    int max_log2;  // supports transforms up to 2^max_log2
};

constexpr std::array<NttPrime, 4> kPrimes = {{
    {998244353u, 3u, 23},
    {167772161u, 3u, 25},
    {469762049u, 3u, 26},
    {754974721u, 11u, 24},
}};

u32 pow_mod(u64 base, u64 e, u32 mod) {
    u64 r = 1;
    base %= mod;
    while (e) {
        if (e & 1) r = r * base % mod;
        base = base * base % mod;
        e >>= 1;
    }
    return static_cast<u32>(r);
}

void ntt(std::vector<u32>& a, const NttPrime& pr, bool inverse) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const u32 mod = pr.mod;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        u32 w = pow_mod(pr.root, (mod - 1) / len, mod);
        if (inverse) w = pow_mod(w, mod - 2, mod);
        const std::size_t half = len / 2;
        std::vector<u32> tw(half);
        tw[0] = 1;
        for (std::size_t k = 1; k < half; ++k) tw[k] = static_cast<u32>(static_cast<u64>(tw[k - 1]) * w % mod);
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const u32 u = a[i + k];
                const u32 v = static_cast<u32>(static_cast<u64>(a[i + k + half]) * tw[k] % mod);
                a[i + k] = u + v >= mod ? u + v - mod : u + v;
                a[i + k + half] = u >= v ? u - v : u + mod - v;
            }
        }
    }
    if (inverse) {
        const u32 inv_n = pow_mod(n, mod - 2, mod);
        for (auto& x : a) x = static_cast<u32>(static_cast<u64>(x) * inv_n % mod);
    }
}

std::vector<u32> residues(std::span<const Integer> a, u32 mod, std::size_t n) {
    std::vector<u32> r(n, 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<u32>(mpz_fdiv_ui(a[i].get_mpz_t(), mod));
    return r;
}

Integer max_abs(std::span<const Integer> a) {
    Integer m = 0;
    for (const auto& x : a) {
        if (mpz_cmpabs(x.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(x);
    }
    return m;
}

Integer from_u128(u128 v) {
    const u64 parts[2] = {static_cast<u64>(v), static_cast<u64>(v >> 64)};
    Integer r;
    mpz_import(r.get_mpz_t(), 2, -1, sizeof(u64), 0, 0, parts);
    return r;
}

}  // namespace

std::vector<Integer> multiply_schoolbook(std::span<const Integer> a, std::span<const Integer> b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Integer> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return out;
}

std::vector<Integer> multiply(std::span<const Integer> a, std::span<const Integer> b) {
    if (a.empty() || b.empty()) return {};
    if (std::min(a.size(), b.size()) <= kSchoolbookThreshold) return multiply_schoolbook(a, b);

    const std::size_t out_len = a.size() + b.size() - 1;
    std::size_t n = 1;
    int log2n = 0;
    while (n < out_len) {
        n <<= 1;
        ++log2n;
    }

    // |c_i| <= bound, so residues determine c_i once prod(moduli) > 2 * bound.
    const Integer bound = max_abs(a) * max_abs(b) * static_cast<unsigned long>(std::min(a.size(), b.size()));
    const Integer needed = 2 * bound + 1;
    std::size_t k = 0;
    Integer modulus = 1;
    while (k < kPrimes.size() && modulus <= needed) modulus *= kPrimes[k++].mod;
    if (modulus <= needed) return multiply_schoolbook(a, b);
    for (std::size_t i = 0; i < k; ++i) {
        if (log2n > kPrimes[i].max_log2) return multiply_schoolbook(a, b);
    }

    std::vector<std::vector<u32>> res(k);
    for (std::size_t i = 0; i < k; ++i) {
        const auto& pr = kPrimes[i];
        auto fa = residues(a, pr.mod, n);
        auto fb = residues(b, pr.mod, n);
        ntt(fa, pr, false);
        ntt(fb, pr, false);
        for (std::size_t t = 0; t < n; ++t) fa[t] = static_cast<u32>(static_cast<u64>(fa[t]) * fb[t] % pr.mod);
        ntt(fa, pr, true);
        fa.resize(out_len);
        res[i] = std::move(fa);
    }

    // Garner: x = y0 + m0 (y1 + m1 (y2 + m2 y3)).
    std::array<std::array<u32, 4>, 4> inv{};
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < i; ++j) inv[j][i] = pow_mod(kPrimes[j].mod % kPrimes[i].mod, kPrimes[i].mod - 2, kPrimes[i].mod);
    }
    u128 full = 1;
    for (std::size_t i = 0; i < k; ++i) full *= kPrimes[i].mod;
    const u128 half = full / 2;

    std::vector<Integer> out(out_len);
    std::array<u64, 4> y{};
    for (std::size_t t = 0; t < out_len; ++t) {
        for (std::size_t i = 0; i < k; ++i) {
            const u64 mod = kPrimes[i].mod;
            u64 v = res[i][t];
            for (std::size_t j = 0; j < i; ++j) {
                v = (v + mod - y[j] % mod) % mod;
                v = v * inv[j][i] % mod;
            }
            y[i] = v;
        }
        u128 x = 0;
        for (std::size_t i = k; i-- > 0;) x = x * kPrimes[i].mod + y[i];
        if (x > half) {
            out[t] = -from_u128(full - x);
        } else {
            out[t] = from_u128(x);
        }
    }
    return out;
}

std::vector<Integer> power(std::span<const Integer> a, unsigned e) {
    std::vector<Integer> result{Integer(1)};
    std::vector<Integer> base(a.begin(), a.end());
    while (e) {
        if (e & 1u) result = multiply(result, base);
        e >>= 1u;
        if (e) base = multiply(base, base);
    }
    return result;
}

}  // namespace littlewood
