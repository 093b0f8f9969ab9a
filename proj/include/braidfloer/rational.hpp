#ifndef BRAIDFLOER_RATIONAL_HPP
#define BRAIDFLOER_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace bf {

// Alexander gradings are integers or half-integers.  Stored as twice the
// value so all arithmetic stays in int64.
struct Half {
    std::int64_t twice = 0;

    static Half whole(std::int64_t n) { return Half{2 * n}; }
    static Half halves(std::int64_t t) { return Half{t}; }

    Half operator+(Half o) const { return Half{twice + o.twice}; }
    Half operator-(Half o) const { return Half{twice - o.twice}; }
    Half operator-() const { return Half{-twice}; }
    Half& operator+=(Half o) { twice += o.twice; return *this; }
    Half& operator-=(Half o) { twice -= o.twice; return *this; }
    auto operator<=>(const Half&) const = default;

    bool is_integer() const { return twice % 2 == 0; }
    std::int64_t as_integer() const {
        if (!is_integer()) throw std::logic_error("half-integer where integer expected");
        return twice / 2;
    }
    std::string str() const {
        if (is_integer()) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }
};

inline std::ostream& operator<<(std::ostream& os, Half h) { return os << h.str(); }

}  // namespace bf

#endif
