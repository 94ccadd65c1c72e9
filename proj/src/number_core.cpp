#include "littlewood/number_core.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>

namespace littlewood {

const Integer& IntSeq::at(std::size_t k) const {
    if (k == 0 || k > values_.size()) {
        throw std::out_of_range("IntSeq index " + std::to_string(k) + " outside 1.." +
                                std::to_string(values_.size()));
    }
    return values_[k - 1];
}

namespace {

// Append-only memo table. Readers take a shared lock; growth is done under an
// exclusive lock by a caller-supplied extension step.
class AppendOnlyTable {
   public:
    template <class Extend>
    Integer get(std::size_t index, Extend extend) {
        {
            std::shared_lock lock(mutex_);
            if (index < values_.size()) return values_[index];
        }
        std::unique_lock lock(mutex_);
        while (values_.size() <= index) values_.push_back(extend(values_));
        return values_[index];
    }

   private:
    std::shared_mutex mutex_;
    std::vector<Integer> values_;
};

AppendOnlyTable& factorial_table() {
    static AppendOnlyTable table;
    return table;
}

AppendOnlyTable& tangent_table() {
    static AppendOnlyTable table;
    return table;
}

AppendOnlyTable& carlitz_table() {
    static AppendOnlyTable table;
    return table;
}

constexpr long kPascalRows = 192;

// Pascal triangle rows 0..kPascalRows-1, built once on first use.
const std::vector<std::vector<Integer>>& pascal() {
    static const std::vector<std::vector<Integer>> rows = [] {
        std::vector<std::vector<Integer>> r(kPascalRows);
        for (long a = 0; a < kPascalRows; ++a) {
            r[a].resize(a + 1);
            r[a][0] = r[a][a] = 1;
            for (long b = 1; b < a; ++b) r[a][b] = r[a - 1][b - 1] + r[a - 1][b];
        }
        return r;
    }();
    return rows;
}

}  // namespace

Integer factorial(unsigned n) {
    return factorial_table().get(n, [](const std::vector<Integer>& prev) {
        if (prev.empty()) return Integer(1);
        return Integer(prev.back() * static_cast<unsigned long>(prev.size()));
    });
}

Integer binomial(long a, long b) {
    if (b < 0 || a < 0 || a < b) return 0;
    if (a < kPascalRows) return pascal()[a][b];
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

Integer tangent_number(unsigned k) {
    if (k == 0) throw std::invalid_argument("tangent numbers are indexed from 1");
    // Slot i of the table holds T(i+1).
    return tangent_table().get(k - 1, [](const std::vector<Integer>& prev) {
        const long kk = static_cast<long>(prev.size()) + 1;
        Integer t = 1;
        for (long j = 1; j < kk; ++j) t -= binomial(2 * kk - 1, 2 * j - 1) * prev[j - 1];
        return t;
    });
}

Integer carlitz_number(unsigned k) {
    if (k == 0) throw std::invalid_argument("Carlitz numbers are indexed from 1");
    return carlitz_table().get(k - 1, [](const std::vector<Integer>& prev) {
        const long kk = static_cast<long>(prev.size()) + 1;
        Integer c = 1;
        for (long j = 1; j < kk; ++j) c -= binomial(kk, j) * binomial(kk - 1, j - 1) * prev[j - 1];
        return c;
    });
}

IntSeq tangent_numbers(unsigned kmax) {
    if (kmax == 0) throw std::invalid_argument("tangent_numbers: kmax must be >= 1");
    std::vector<Integer> v;
    v.reserve(kmax);
    for (unsigned k = 1; k <= kmax; ++k) v.push_back(tangent_number(k));
    return IntSeq(std::move(v));
}

IntSeq carlitz_numbers(unsigned kmax) {
    if (kmax == 0) throw std::invalid_argument("carlitz_numbers: kmax must be >= 1");
    std::vector<Integer> v;
    v.reserve(kmax);
    for (unsigned k = 1; k <= kmax; ++k) v.push_back(carlitz_number(k));
    return IntSeq(std::move(v));
}

Rational eulerian_general(unsigned n, const Rational& x) {
    if (n == 0) throw std::invalid_argument("eulerian_general: n must be >= 1");
    if (x <= -1 || x >= static_cast<long>(n)) return 0;
    const Rational shifted = x + 1;
    const long upper = floor(shifted).get_si();
    Rational sum = 0;
    for (long j = 0; j <= upper; ++j) {
        Rational term = pow(Rational(shifted - j), n) * binomial(static_cast<long>(n) + 1, j);
        if (j % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

std::vector<Rational> eulerian_polynomial(unsigned N) {
    if (N == 0) throw std::invalid_argument("eulerian_polynomial: N must be >= 1");
    const unsigned degree = 2 * N - 1;
    std::vector<Rational> c(degree + 1);
    for (unsigned a = 1; a <= degree; ++a) c[a] = eulerian_general(degree, Rational(static_cast<long>(a) - 1));
    return c;
}

Integer composition_count(unsigned N, unsigned n, long m) {
    if (N == 0 || n == 0) throw std::invalid_argument("composition_count: N and n must be >= 1");
    const long NN = static_cast<long>(N);
    const long nn = static_cast<long>(n);
    Integer total = 0;
    for (long j = 0; j <= NN; ++j) {
        Integer term = binomial(NN, j) * binomial(NN + m - nn * j - 1, NN - 1);
        if (j % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

void seed_tables(unsigned kmax) {
    if (kmax == 0) return;
    factorial(4 * kmax);
    tangent_number(kmax);
    carlitz_number(kmax);
}

}  // namespace littlewood
