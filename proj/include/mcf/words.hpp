#pragma once

#include <array>
#include <string>
#include <string_view>

#include "mcf/linalg.hpp"

namespace mcf {

// Words over {1,2,3} are ASCII digit strings: "123233...".
using Word = std::string;

bool is_valid_word(std::string_view w);

// Letter occurrence counts (letter i -> entry i-1).
IVec3 parikh(std::string_view w);

struct Substitution {
    std::array<Word, 3> images;  // images[i] = image of letter i+1

    const Word& image(char letter) const { return images[static_cast<std::size_t>(letter - '1')]; }
    bool operator==(const Substitution& o) const = default;
};

extern const Substitution kIdentitySubstitution;

Word apply(const Substitution& s, std::string_view w);

// compose(outer, inner)(w) = outer(inner(w))
Substitution compose(const Substitution& outer, const Substitution& inner);

// entry (i,j) = occurrences of letter i+1 in the image of letter j+1
IMat3 incidence(const Substitution& s);

// "1->23, 2->1233, 3->1232"
std::string format_substitution(const Substitution& s);

}  // namespace mcf
