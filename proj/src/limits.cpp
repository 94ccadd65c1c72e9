#include "littlewood/limits.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>

#include "littlewood/number_core.hpp"
#include "littlewood/partitions.hpp"

namespace littlewood {

std::string_view to_string(LimitFamily family) { return family == LimitFamily::fekete ? "fekete" : "galois"; }

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

// Integer Eulerian number <n over x> for integer x.
Integer eulerian_int(unsigned n, long x) {
    const Rational v = eulerian_general(n, Rational(x));
    return v.get_num();
}

// Integer polynomials S_k(x) = (2k-1)! F_{2k}(x) (k >= 1) and S_0 = 1, grown on
// demand. Substituting F = S / (2k-1)! into the F(k, m) recursion gives
//   S_k = sum_{j<k} w(k,j) s(j) C(2k-1, 2j-1) (2k-2j) A_j S_{k-j} + w(k,k) s(k) A_k
// where s is T (Fekete) or C (Galois) and A_j has the integer Eulerian
// numbers of row 2j-1 as coefficients.
class TriangleCache {
   public:
    explicit TriangleCache(LimitFamily family) : family_(family) {}

    std::vector<Integer> row(unsigned k) {
        std::lock_guard lock(mutex_);
        if (rows_.empty()) rows_.push_back({Integer(1)});
        while (rows_.size() <= k) extend();
        return rows_[k];
    }

   private:
    Integer weight(long k, long j) const {
        if (family_ == LimitFamily::fekete) return binomial(2 * k - 1, 2 * j - 1);
        return binomial(k, j) * binomial(k - 1, j - 1);
    }

    Integer special(unsigned j) const {
        return family_ == LimitFamily::fekete ? tangent_number(j) : carlitz_number(j);
    }

    void extend() {
        const long k = static_cast<long>(rows_.size());
        std::vector<Integer> out(2 * k, 0);
        for (long j = 1; j <= k; ++j) {
            const unsigned deg = static_cast<unsigned>(2 * j - 1);
            Integer factor = weight(k, j) * special(static_cast<unsigned>(j));
            if (j < k) factor *= binomial(2 * k - 1, 2 * j - 1) * (2 * k - 2 * j);
            const auto& prev = rows_[k - j];
            for (long a = 1; a <= 2 * j - 1; ++a) {
                const Integer e = factor * eulerian_int(deg, a - 1);
                for (std::size_t i = 0; i < prev.size(); ++i) {
                    if (prev[i] != 0) out[a + static_cast<long>(i)] += e * prev[i];
                }
            }
        }
        rows_.push_back(std::move(out));
    }

    LimitFamily family_;
    std::mutex mutex_;
    std::vector<std::vector<Integer>> rows_;
};

TriangleCache& triangle_cache(LimitFamily family) {
    static TriangleCache fekete(LimitFamily::fekete);
    static TriangleCache galois(LimitFamily::galois);
    return family == LimitFamily::fekete ? fekete : galois;
}

TriangleRow triangle_row(LimitFamily family, unsigned k) {
    require(k >= 1, "triangle rows are indexed from 1");
    auto poly = triangle_cache(family).row(k);
    if (poly.at(0) != 0) throw std::logic_error("triangle row has a nonzero constant term");
    TriangleRow row;
    row.k = k;
    row.values.assign(poly.begin() + 1, poly.end());
    return row;
}

Rational limit_recursive(LimitFamily family, unsigned q) {
    require(q >= 1, "limits are defined for q >= 1");
    const auto poly = triangle_cache(family).row(q);
    return make_rational(poly.at(q), factorial(2 * q - 1));
}

// Sum over a_1 + ... + a_l = target, a_i in [1, 2N_i - 1], of prod weight_i(a_i).
Rational composition_sum(const std::vector<std::vector<Rational>>& weights, std::size_t i, long target) {
    if (i == weights.size()) return target == 0 ? Rational(1) : Rational(0);
    Rational total = 0;
    for (std::size_t a = 1; a < weights[i].size(); ++a) {
        const long rest = target - static_cast<long>(a);
        if (rest < 0) break;
        if (weights[i][a] == 0) continue;
        Rational tail = composition_sum(weights, i + 1, rest);
        if (tail != 0) total += weights[i][a] * tail;
    }
    return total;
}

// weights[a] = s(N) / (2N-1)! * <2N-1 over a-1> for a = 1..2N-1 (index 0 unused).
std::vector<Rational> block_weights(const Integer& special, unsigned N) {
    const unsigned deg = 2 * N - 1;
    const Rational c = make_rational(special, factorial(deg));
    std::vector<Rational> w(deg + 1, 0);
    for (unsigned a = 1; a <= deg; ++a) w[a] = c * eulerian_general(deg, Rational(static_cast<long>(a) - 1));
    return w;
}

}  // namespace

Rational fekete_limit_recursive(unsigned q) { return limit_recursive(LimitFamily::fekete, q); }

Rational galois_limit_recursive(unsigned q) { return limit_recursive(LimitFamily::galois, q); }

TriangleRow fekete_triangle_row(unsigned k) { return triangle_row(LimitFamily::fekete, k); }

TriangleRow galois_triangle_row(unsigned k) { return triangle_row(LimitFamily::galois, k); }

LimitTable limit_table(LimitFamily family, unsigned qmax) {
    LimitTable table;
    table.family = family;
    for (unsigned q = 1; q <= qmax; ++q) table.entries.emplace(q, limit_recursive(family, q));
    return table;
}

Rational fekete_limit_direct(unsigned q) {
    require(q >= 1 && q <= kMaxDirectQ, "fekete_limit_direct: q must be in 1.." + std::to_string(kMaxDirectQ));
    Rational total = 0;
    for (const auto& prof : even_size_profiles(q)) {
        std::vector<std::vector<Rational>> weights;
        for (unsigned size : prof.sizes) weights.push_back(block_weights(tangent_number(size / 2), size / 2));
        total += Rational(prof.count) * composition_sum(weights, 0, q);
    }
    return total;
}

Rational galois_limit_direct(unsigned q) {
    require(q >= 1 && q <= kMaxDirectQ, "galois_limit_direct: q must be in 1.." + std::to_string(kMaxDirectQ));
    Rational total = 0;
    for (const auto& prof : galois_size_profiles(q)) {
        Integer multinomial = factorial(q);
        std::vector<std::vector<Rational>> weights;
        for (unsigned N : prof.sizes) {
            multinomial /= factorial(N);
            weights.push_back(block_weights(carlitz_number(N), N));
        }
        total += Rational(prof.count * multinomial) * composition_sum(weights, 0, q);
    }
    return total;
}

namespace {

// Sequence indexed by an integer offset: values[i] belongs to index lo + i.
template <class T>
struct OffsetSeries {
    long lo = 0;
    std::vector<T> values;
    long hi() const { return lo + static_cast<long>(values.size()) - 1; }
};

// Convolves per-block series and returns the coefficient at `target`.
// `is_zero`, `mul` and `add` supply the scalar algebra.
template <class T, class Mul, class Add, class IsZero>
T convolve_at(const std::vector<const OffsetSeries<T>*>& blocks, long target, Mul mul, Add add, IsZero is_zero) {
    std::vector<long> tail_lo(blocks.size() + 1, 0), tail_hi(blocks.size() + 1, 0);
    for (std::size_t i = blocks.size(); i-- > 0;) {
        tail_lo[i] = tail_lo[i + 1] + blocks[i]->lo;
        tail_hi[i] = tail_hi[i + 1] + blocks[i]->hi();
    }
    if (blocks.empty() || target < tail_lo[0] || target > tail_hi[0]) return T{};

    OffsetSeries<T> acc{0, {}};
    acc.values.push_back(T{});
    bool first = true;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto& blk = *blocks[b];
        // Partial sums that can still reach the target.
        const long keep_lo = target - tail_hi[b + 1];
        const long keep_hi = target - tail_lo[b + 1];
        OffsetSeries<T> next{keep_lo, std::vector<T>(static_cast<std::size_t>(keep_hi - keep_lo + 1))};
        std::vector<bool> used(next.values.size(), false);
        if (first) {
            for (std::size_t i = 0; i < blk.values.size(); ++i) {
                const long idx = blk.lo + static_cast<long>(i);
                if (idx < keep_lo || idx > keep_hi || is_zero(blk.values[i])) continue;
                next.values[idx - keep_lo] = blk.values[i];
                used[idx - keep_lo] = true;
            }
        } else {
            for (std::size_t i = 0; i < acc.values.size(); ++i) {
                if (is_zero(acc.values[i])) continue;
                for (std::size_t j = 0; j < blk.values.size(); ++j) {
                    const long idx = acc.lo + static_cast<long>(i) + blk.lo + static_cast<long>(j);
                    if (idx < keep_lo || idx > keep_hi || is_zero(blk.values[j])) continue;
                    T term = mul(acc.values[i], blk.values[j]);
                    auto& slot = next.values[idx - keep_lo];
                    slot = used[idx - keep_lo] ? add(slot, term) : std::move(term);
                    used[idx - keep_lo] = true;
                }
            }
        }
        first = false;
        acc = std::move(next);
    }
    return acc.values[static_cast<std::size_t>(target - acc.lo)];
}

}  // namespace

Rational shifted_fekete_limit(unsigned q, const Rational& R) {
    require(q >= 1 && q <= kMaxShiftedQ, "shifted_fekete_limit: q must be in 1.." + std::to_string(kMaxShiftedQ));
    std::map<BlockType, OffsetSeries<Rational>> cache;
    auto series_for = [&](const BlockType& b) -> const OffsetSeries<Rational>& {
        auto it = cache.find(b);
        if (it != cache.end()) return it->second;
        const long N = b.N;
        const long d = N - static_cast<long>(b.P);
        const unsigned deg = static_cast<unsigned>(2 * N - 1);
        const Rational shift = 2 * R * d;
        // Nonzero only for 2Rd + a - 1 in (-1, 2N - 1).
        const long lo = floor(Rational(-shift)).get_si() + 1;
        const long hi = ceil(Rational(2 * N - shift)).get_si() - 1;
        const Rational c = make_rational(tangent_number(b.N), factorial(deg));
        OffsetSeries<Rational> s{lo, {}};
        for (long a = lo; a <= hi; ++a) s.values.push_back(c * eulerian_general(deg, Rational(shift + a - 1)));
        return cache.emplace(b, std::move(s)).first->second;
    };

    Rational total = 0;
    for (const auto& prof : even_block_profiles(q)) {
        std::vector<const OffsetSeries<Rational>*> blocks;
        for (const auto& b : prof.entries) blocks.push_back(&series_for(b));
        const Rational term = convolve_at<Rational>(
            blocks, static_cast<long>(q), [](const Rational& x, const Rational& y) { return Rational(x * y); },
            [](const Rational& x, const Rational& y) { return Rational(x + y); },
            [](const Rational& x) { return x == 0; });
        total += Rational(prof.count) * term;
    }
    return total;
}

PiecewisePoly phi_piecewise(unsigned q) {
    require(q >= 1 && q <= kMaxSymbolicQ, "phi_piecewise: q must be in 1.." + std::to_string(kMaxSymbolicQ));
    const Rational lo = 0;
    const Rational hi = Rational(1, 2);
    std::map<unsigned, PiecewisePoly> splines;
    std::map<BlockType, OffsetSeries<PiecewisePoly>> cache;
    auto series_for = [&](const BlockType& b) -> const OffsetSeries<PiecewisePoly>& {
        auto it = cache.find(b);
        if (it != cache.end()) return it->second;
        const long N = b.N;
        const long d = N - static_cast<long>(b.P);
        const unsigned deg = static_cast<unsigned>(2 * N - 1);
        auto sp = splines.find(deg);
        if (sp == splines.end()) sp = splines.emplace(deg, eulerian_spline(deg)).first;
        // For R in [0, 1/2] the argument 2Rd + a - 1 sweeps between a - 1 and
        // a - 1 + d; keep every a for which that range meets (-1, 2N - 1).
        const long a_lo = 1 - std::max(0L, d);
        const long a_hi = 2 * N - 1 - std::min(0L, d);
        const Rational c = make_rational(tangent_number(b.N), factorial(deg));
        OffsetSeries<PiecewisePoly> s{a_lo, {}};
        for (long a = a_lo; a <= a_hi; ++a) {
            PiecewisePoly g = pw_affine(sp->second, Rational(2 * d), Rational(a - 1));
            s.values.push_back(pw_scale(pw_restrict(g, lo, hi), c));
        }
        return cache.emplace(b, std::move(s)).first->second;
    };

    PiecewisePoly total;
    for (const auto& prof : even_block_profiles(q)) {
        std::vector<const OffsetSeries<PiecewisePoly>*> blocks;
        for (const auto& b : prof.entries) blocks.push_back(&series_for(b));
        PiecewisePoly term = convolve_at<PiecewisePoly>(
            blocks, static_cast<long>(q), [](const PiecewisePoly& x, const PiecewisePoly& y) { return pw_mul(x, y); },
            [](const PiecewisePoly& x, const PiecewisePoly& y) { return pw_add(x, y); },
            [](const PiecewisePoly& x) { return x.is_zero(); });
        total = pw_add(total, pw_scale(term, Rational(prof.count)));
    }
    return total;
}

PhiMinimum phi_min(unsigned q, const Rational& eps) {
    require(q >= 2 && q <= kMaxSymbolicQ, "phi_min: q must be in 2.." + std::to_string(kMaxSymbolicQ));
    const auto r = pw_minimize(phi_piecewise(q), Rational(0), Rational(1, 2), eps);
    return {r.argmin, r.value, r.alternative};
}

}  // namespace littlewood
