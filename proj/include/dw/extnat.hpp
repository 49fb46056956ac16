#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>

namespace dw {

// Distance value over the extended naturals: finite hop counts plus a single
// infinity. Addition saturates (inf + x == inf) and infinity compares equal
// to itself, so relation predicates evaluate cleanly across components.
class ExtNat {
public:
    constexpr ExtNat() = default;  // zero
    constexpr explicit ExtNat(std::uint32_t value) : rep_(value) {}

    static constexpr ExtNat infinity() {
        ExtNat e;
        e.rep_ = kInf;
        return e;
    }

    constexpr bool is_finite() const { return rep_ != kInf; }

    // Only meaningful when finite.
    constexpr std::uint32_t value() const { return rep_; }

    friend constexpr ExtNat operator+(ExtNat a, ExtNat b) {
        if (!a.is_finite() || !b.is_finite()) return infinity();
        return ExtNat(a.rep_ + b.rep_);
    }

    // Infinity sorts above every finite value.
    friend constexpr auto operator<=>(ExtNat a, ExtNat b) = default;

    friend std::ostream& operator<<(std::ostream& os, ExtNat e) {
        if (e.is_finite()) return os << e.rep_;
        return os << "inf";
    }

private:
    static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
    std::uint32_t rep_ = 0;
};

// |a - b| for finite operands.
inline std::uint32_t finite_gap(ExtNat a, ExtNat b) {
    std::uint32_t x = a.value(), y = b.value();
    return x > y ? x - y : y - x;
}

}  // namespace dw
