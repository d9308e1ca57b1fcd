#include "mcf/vector_spec.hpp"

#include <cctype>
#include <vector>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace mcf {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool parse_integer(const std::string& s, std::int64_t& out) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '+' || s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    out = std::strtoll(s.c_str(), nullptr, 10);
    return true;
}

double parse_component(const std::string& raw, bool& is_int, std::int64_t& int_value) {
    const std::string s = trim(raw);
    is_int = false;
    if (s == "e") return std::exp(1.0);
    if (s == "pi") return 4.0 * std::atan(1.0);
    if (const auto slash = s.find('/'); slash != std::string::npos) {
        std::int64_t p, q;
        if (!parse_integer(s.substr(0, slash), p) || !parse_integer(s.substr(slash + 1), q) ||
            q == 0)
            throw std::invalid_argument("bad rational component '" + s + "'");
        return static_cast<double>(p) / static_cast<double>(q);
    }
    if (parse_integer(s, int_value)) {
        is_int = true;
        return static_cast<double>(int_value);
    }
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0' || !std::isfinite(v))
        throw std::invalid_argument("bad vector component '" + s + "'");
    return v;
}

}  // namespace

VectorSpec parse_vector(const std::string& text) {
    VectorSpec spec;
    std::vector<std::string> parts;
    std::size_t pos = 0;
    for (;;) {
        const std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) {
            parts.push_back(text.substr(pos));
            break;
        }
        parts.push_back(text.substr(pos, comma - pos));
        pos = comma + 1;
    }
    if (parts.size() != 3)
        throw std::invalid_argument("vector must have exactly 3 comma-separated components");

    bool all_int = true;
    IVec3 ints{};
    for (int i = 0; i < 3; ++i) {
        bool is_int = false;
        std::int64_t iv = 0;
        spec.values[static_cast<std::size_t>(i)] = parse_component(parts[static_cast<std::size_t>(i)], is_int, iv);
        if (is_int)
            ints[static_cast<std::size_t>(i)] = iv;
        else
            all_int = false;
        if (i) spec.repr += ',';
        spec.repr += trim(parts[static_cast<std::size_t>(i)]);
    }
    if (all_int) spec.integers = ints;
    return spec;
}

}  // namespace mcf
