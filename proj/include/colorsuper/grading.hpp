#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace colorsuper {

// An element of Z2 x Z2.  Controls the commutation sign rule of the whole
// library: a pair of homogeneous objects commutes when the inner product of
// their degrees is even and anticommutes when it is odd.
struct Degree {
    std::uint8_t a1 = 0;
    std::uint8_t a2 = 0;

    friend constexpr bool operator==(Degree x, Degree y) = default;
    // Total order (0,0) < (0,1) < (1,0) < (1,1); keeps term orders canonical.
    friend constexpr auto operator<=>(Degree x, Degree y) {
        return std::pair{x.a1, x.a2} <=> std::pair{y.a1, y.a2};
    }
};

constexpr Degree add(Degree x, Degree y) {
    return {static_cast<std::uint8_t>(x.a1 ^ y.a1),
            static_cast<std::uint8_t>(x.a2 ^ y.a2)};
}

constexpr int inner(Degree x, Degree y) {
    return (x.a1 * y.a1 + x.a2 * y.a2) % 2;
}

// (-1)^(x.y): +1 means the bracket of the pair is a commutator,
// -1 means it is an anticommutator.
constexpr int commutation_sign(Degree x, Degree y) {
    return inner(x, y) == 0 ? +1 : -1;
}

inline std::string to_string(Degree d) {
    return std::string{static_cast<char>('0' + d.a1),
                       static_cast<char>('0' + d.a2)};
}

inline Degree degree_from_string(const std::string& s) {
    if (s.size() != 2 || (s[0] != '0' && s[0] != '1') || (s[1] != '0' && s[1] != '1'))
        throw std::invalid_argument("bad degree string: " + s);
    return {static_cast<std::uint8_t>(s[0] - '0'),
            static_cast<std::uint8_t>(s[1] - '0')};
}

constexpr std::array<Degree, 4> all_degrees() {
    return {Degree{0, 0}, Degree{0, 1}, Degree{1, 0}, Degree{1, 1}};
}

}  // namespace colorsuper
