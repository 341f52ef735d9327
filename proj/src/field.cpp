#include "bettisplit/field.hpp"

#include <stdexcept>

namespace bettisplit {

bool is_prime(std::uint32_t m) {
    if (m < 2) return false;
    if (m % 2 == 0) return m == 2;
    for (std::uint32_t d = 3; d * d <= m; d += 2)
        if (m % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
    if (!is_prime(p))
        throw std::invalid_argument("field characteristic must be prime: " +
                                    std::to_string(p));
    if (p >= (1u << 16))
        throw std::invalid_argument("prime fields supported up to 2^16");
    return FieldSpec(p);
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "Q") return rationals();
    if (text.rfind("Fp:", 0) == 0) {
        const std::string num = text.substr(3);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad field spec: " + text);
        unsigned long v = std::stoul(num);
        if (v >= (1u << 16)) throw std::invalid_argument("prime too large: " + text);
        return prime_field(static_cast<std::uint32_t>(v));
    }
    throw std::invalid_argument("bad field spec (want Q or Fp:<prime>): " + text);
}

std::uint32_t FieldSpec::prime() const {
    if (is_rationals()) throw std::logic_error("rationals have no prime");
    return p_;
}

std::string FieldSpec::str() const {
    return is_rationals() ? "Q" : "Fp:" + std::to_string(p_);
}

}  // namespace bettisplit
