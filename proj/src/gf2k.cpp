#include "littlewood/gf2k.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace littlewood {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

u32 mulmod_gf2(u32 a, u32 b, u32 poly, unsigned k) {
    u64 r = 0;
    u64 aa = a;
    while (b) {
        if (b & 1u) r ^= aa;
        b >>= 1;
        aa <<= 1;
        if (aa >> k & 1u) aa ^= poly;
    }
    return static_cast<u32>(r);
}

u32 powmod_gf2(u32 base, u64 e, u32 poly, unsigned k) {
    u32 r = 1;
    while (e) {
        if (e & 1u) r = mulmod_gf2(r, base, poly, k);
        base = mulmod_gf2(base, base, poly, k);
        e >>= 1;
    }
    return r;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> f;
    for (u64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            f.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) f.push_back(n);
    return f;
}

}  // namespace

bool is_primitive_gf2(u32 poly, unsigned k) {
    if (k == 0 || !(poly >> k & 1u) || (poly >> (k + 1)) != 0) return false;
    if (!(poly & 1u)) return false;  // x would not be a unit
    const u64 order = (u64{1} << k) - 1;
    const u32 x = k == 1 ? 1u : 2u;
    if (powmod_gf2(x, order, poly, k) != 1) return false;
    for (u64 p : prime_factors(order)) {
        if (powmod_gf2(x, order / p, poly, k) == 1) return false;
    }
    return true;
}

u32 FieldGF2k::mul(u32 a, u32 b) const {
    if (a == 0 || b == 0) return 0;
    return antilog_[(static_cast<u64>(log_[a]) + log_[b]) % order()];
}

FieldGF2k build_gf2k(unsigned k) {
    if (k < FieldGF2k::kMinDegree || k > FieldGF2k::kMaxDegree) {
        throw std::out_of_range("GF(2^k) supported for 2 <= k <= 24, got k=" + std::to_string(k));
    }
    FieldGF2k f;
    f.k_ = k;
    for (u32 poly = (1u << k) | 1u; poly < (1u << (k + 1)); poly += 2) {
        if (is_primitive_gf2(poly, k)) {
            f.poly_ = poly;
            break;
        }
    }
    if (f.poly_ == 0) throw std::logic_error("no primitive polynomial found");

    const u32 n = f.order();
    f.antilog_.resize(n);
    f.log_.assign(f.size(), 0);
    std::vector<bool> seen(f.size(), false);
    u32 x = 1;
    for (u32 i = 0; i < n; ++i) {
        if (seen[x]) throw std::logic_error("antilog table repeats before wrap-around");
        seen[x] = true;
        f.antilog_[i] = x;
        f.log_[x] = i;
        x <<= 1;
        if (x >> k & 1u) x ^= f.poly_;
    }
    if (x != 1) throw std::logic_error("theta does not have order 2^k - 1");

    // Tr is GF(2)-linear: Tr(x) = parity(x & mask) with mask bit i = Tr(theta^i).
    u32 mask = 0;
    for (unsigned i = 0; i < k; ++i) {
        u32 y = 1u << i;
        u32 t = 0;
        for (unsigned s = 0; s < k; ++s) {
            t ^= y;
            y = mulmod_gf2(y, y, f.poly_, k);
        }
        if (t > 1) throw std::logic_error("trace left the prime field");
        mask |= t << i;
    }
    f.trace_.resize(f.size());
    for (u32 e = 0; e < f.size(); ++e) f.trace_[e] = static_cast<std::uint8_t>(std::popcount(e & mask) & 1);
    return f;
}

}  // namespace littlewood
