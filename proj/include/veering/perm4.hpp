#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "veering/errors.hpp"

namespace veering {

/// Bijection of {0,1,2,3}; the image type of face-gluing maps.
class Perm4 {
public:
    constexpr Perm4() : image_{0, 1, 2, 3} {}
    Perm4(int a, int b, int c, int d) : image_{a, b, c, d} { validate(); }
    explicit Perm4(const std::array<int, 4>& image) : image_(image) { validate(); }

    int operator[](int i) const { return image_[static_cast<std::size_t>(i)]; }

    Perm4 inverse() const {
        Perm4 out;
        for (int i = 0; i < 4; ++i) out.image_[static_cast<std::size_t>(image_[static_cast<std::size_t>(i)])] = i;
        return out;
    }

    /// Composition: (*this of other)[i] = (*this)[other[i]].
    Perm4 of(const Perm4& other) const {
        Perm4 out;
        for (int i = 0; i < 4; ++i) out.image_[static_cast<std::size_t>(i)] = image_[static_cast<std::size_t>(other.image_[static_cast<std::size_t>(i)])];
        return out;
    }

    bool is_identity() const { return image_ == std::array<int, 4>{0, 1, 2, 3}; }

    /// True for odd permutations. Every face gluing of an oriented
    /// triangulation must be odd (orientation-reversing on the shared face).
    bool is_odd() const {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (image_[static_cast<std::size_t>(i)] > image_[static_cast<std::size_t>(j)]) ++inversions;
        return inversions % 2 == 1;
    }

    friend bool operator==(const Perm4& x, const Perm4& y) { return x.image_ == y.image_; }
    friend bool operator!=(const Perm4& x, const Perm4& y) { return !(x == y); }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < 4; ++i) s += std::to_string(image_[static_cast<std::size_t>(i)]) + (i < 3 ? "," : ")");
        return s;
    }

private:
    void validate() const {
        int seen = 0;
        for (int v : image_) {
            check_internal(v >= 0 && v < 4, "permutation image out of range");
            seen |= 1 << v;
        }
        check_internal(seen == 0xF, "permutation image not a bijection");
    }

    std::array<int, 4> image_;
};

/// Sign of (a,b,c,d) as an arrangement of {0,1,2,3}: true when even.
inline bool arrangement_even(int a, int b, int c, int d) {
    int v[4] = {a, b, c, d};
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (v[i] > v[j]) ++inversions;
    return inversions % 2 == 0;
}

}  // namespace veering
