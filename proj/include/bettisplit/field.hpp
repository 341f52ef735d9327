#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace bettisplit {

bool is_prime(std::uint32_t m);

// Coefficient field: the rationals (characteristic 0) or a prime field F_p.
// The modular elimination path precomputes an inverse table, so p < 2^16.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(0); }
    static FieldSpec prime_field(std::uint32_t p);
    // Accepts "Q" or "Fp:<prime>", e.g. "Fp:2".
    static FieldSpec parse(const std::string& text);

    bool is_rationals() const { return p_ == 0; }
    std::uint32_t characteristic() const { return p_; }
    std::uint32_t prime() const;
    std::string str() const;

    auto operator<=>(const FieldSpec&) const = default;

private:
    explicit FieldSpec(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

}  // namespace bettisplit
