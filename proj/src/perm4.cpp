#include "fpg/perm4.hpp"

#include <algorithm>

namespace fpg {

Perm4 Perm4::parse(const std::string& digits) {
    if (digits.size() != 4) throw std::invalid_argument("Perm4: expected four digits, got '" + digits + "'");
    std::array<int, 4> img{};
    for (int i = 0; i < 4; ++i) {
        if (digits[i] < '0' || digits[i] > '3') throw std::invalid_argument("Perm4: bad digit in '" + digits + "'");
        img[i] = digits[i] - '0';
    }
    return Perm4(img[0], img[1], img[2], img[3]);
}

const std::array<Perm4, 24>& Perm4::all() {
    static const std::array<Perm4, 24> table = [] {
        std::array<Perm4, 24> out{};
        std::array<int, 4> img{0, 1, 2, 3};
        int k = 0;
        do {
            out[k++] = Perm4(img[0], img[1], img[2], img[3]);
        } while (std::next_permutation(img.begin(), img.end()));
        return out;
    }();
    return table;
}

int Perm4::index() const {
    const auto& table = all();
    return static_cast<int>(std::lower_bound(table.begin(), table.end(), *this) - table.begin());
}

std::string Perm4::str() const {
    std::string s(4, '0');
    for (int i = 0; i < 4; ++i) s[i] = static_cast<char>('0' + img_[i]);
    return s;
}

}  // namespace fpg
