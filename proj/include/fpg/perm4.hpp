#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fpg {

/// A permutation of {0,1,2,3}, stored by images.
///
/// Composition follows function notation: (p * q)[i] == p[q[i]].
class Perm4 {
public:
    constexpr Perm4() : img_{0, 1, 2, 3} {}
    constexpr Perm4(int a, int b, int c, int d)
        : img_{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(c),
               static_cast<std::uint8_t>(d)} {
        if (!valid()) throw std::invalid_argument("Perm4: images are not a bijection of {0,1,2,3}");
    }

    /// Parses four digits such as "1023".
    static Perm4 parse(const std::string& digits);

    /// Swaps a and b, fixes the other two points.
    static constexpr Perm4 transposition(int a, int b) {
        std::array<int, 4> img{0, 1, 2, 3};
        img[a] = b;
        img[b] = a;
        return Perm4(img[0], img[1], img[2], img[3]);
    }

    /// All 24 permutations in lexicographic order of their image strings.
    static const std::array<Perm4, 24>& all();

    constexpr int operator[](int i) const { return img_[i]; }

    constexpr Perm4 operator*(Perm4 q) const {
        return Perm4(img_[q[0]], img_[q[1]], img_[q[2]], img_[q[3]]);
    }

    constexpr Perm4 inverse() const {
        std::array<int, 4> inv{};
        for (int i = 0; i < 4; ++i) inv[img_[i]] = i;
        return Perm4(inv[0], inv[1], inv[2], inv[3]);
    }

    /// +1 for even permutations, -1 for odd.
    constexpr int sign() const {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (img_[i] > img_[j]) ++inversions;
        return inversions % 2 == 0 ? 1 : -1;
    }

    constexpr bool is_identity() const { return img_[0] == 0 && img_[1] == 1 && img_[2] == 2 && img_[3] == 3; }

    /// Lexicographic rank in [0, 24).
    int index() const;

    std::string str() const;

    constexpr auto operator<=>(const Perm4&) const = default;

private:
    constexpr bool valid() const {
        unsigned seen = 0;
        for (auto v : img_) {
            if (v > 3) return false;
            seen |= 1u << v;
        }
        return seen == 0xF;
    }

    std::array<std::uint8_t, 4> img_;
};

}  // namespace fpg
