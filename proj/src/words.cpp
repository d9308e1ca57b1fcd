#include "mcf/words.hpp"

#include <stdexcept>

namespace mcf {

const Substitution kIdentitySubstitution{{"1", "2", "3"}};

bool is_valid_word(std::string_view w) {
    for (char c : w)
        if (c < '1' || c > '3') return false;
    return true;
}

IVec3 parikh(std::string_view w) {
    IVec3 p{0, 0, 0};
    for (char c : w) {
        if (c < '1' || c > '3') throw std::invalid_argument("word letter out of range");
        ++p[static_cast<std::size_t>(c - '1')];
    }
    return p;
}

Word apply(const Substitution& s, std::string_view w) {
    Word out;
    std::size_t n = 0;
    for (char c : w) n += s.image(c).size();
    out.reserve(n);
    for (char c : w) out += s.image(c);
    return out;
}

Substitution compose(const Substitution& outer, const Substitution& inner) {
    return Substitution{{mcf::apply(outer, inner.images[0]), mcf::apply(outer, inner.images[1]),
                         mcf::apply(outer, inner.images[2])}};
}

IMat3 incidence(const Substitution& s) {
    IMat3 m{};
    for (int j = 0; j < 3; ++j)
        for (char c : s.images[static_cast<std::size_t>(j)]) ++m[static_cast<std::size_t>(c - '1')][static_cast<std::size_t>(j)];
    return m;
}

std::string format_substitution(const Substitution& s) {
    std::string out;
    for (int j = 0; j < 3; ++j) {
        if (j) out += ", ";
        out += std::to_string(j + 1) + "->" + s.images[static_cast<std::size_t>(j)];
    }
    return out;
}

}  // namespace mcf
