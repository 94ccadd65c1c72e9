#ifndef LITTLEWOOD_GF2K_HPP
#define LITTLEWOOD_GF2K_HPP

#include <cstdint>
#include <vector>

namespace littlewood {

/// GF(2^k) in a polynomial basis over GF(2). Elements are bitmasks below 2^k;
/// theta is the class of x modulo the primitive polynomial.
class FieldGF2k {
   public:
    static constexpr unsigned kMinDegree = 2;
    static constexpr unsigned kMaxDegree = 24;

    unsigned degree() const noexcept { return k_; }
    /// Bitmask including the x^k term.
    std::uint32_t primitive_polynomial() const noexcept { return poly_; }
    std::uint32_t order() const noexcept { return (1u << k_) - 1; }
    std::uint32_t size() const noexcept { return 1u << k_; }

    /// antilog()[i] = theta^i for i < 2^k - 1.
    const std::vector<std::uint32_t>& antilog() const noexcept { return antilog_; }
    /// log()[x] = i with theta^i = x, for x != 0.
    const std::vector<std::uint32_t>& log() const noexcept { return log_; }
    /// Absolute trace Tr(x) in {0, 1} for every element.
    std::uint8_t trace(std::uint32_t x) const { return trace_.at(x); }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;

    friend FieldGF2k build_gf2k(unsigned k);

   private:
    unsigned k_ = 0;
    std::uint32_t poly_ = 0;
    std::vector<std::uint32_t> antilog_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint8_t> trace_;
};

/// Field for the numerically smallest primitive polynomial of degree k.
/// Throws std::out_of_range unless 2 <= k <= 24.
FieldGF2k build_gf2k(unsigned k);

/// True when the degree-k polynomial `poly` (bitmask with bit k set) is
/// primitive, i.e. x has multiplicative order 2^k - 1 modulo it.
bool is_primitive_gf2(std::uint32_t poly, unsigned k);

}  // namespace littlewood

#endif
