#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mcf/algorithms.hpp"
#include "mcf/words.hpp"

namespace mcf {

// Word along the orbit coding of v, built by composing the coding's
// substitutions.  `n_compositions` substitutions are composed (fewer if the
// floating-point orbit degenerates first) and the first `max_len` letters
// are returned; the result may be shorter than `max_len` when the
// composition stalls.  The seed letter is phase-corrected: tracking the
// first-letter maps of the composed substitutions keeps the output stable
// under extra compositions even for branches whose images of 1 do not
// start with 1 (Reverse branch 4, Cassaigne branch 2).
Word s_adic_word(const AlgorithmDef& algo, const Vec3& v, std::size_t max_len,
                 std::size_t n_compositions = 100);

// Strict-length variant: keeps composing past the floor until the word has
// target_len letters; throws StallError if 1000 compositions are not enough.
Word s_adic_prefix(const AlgorithmDef& algo, const Vec3& v, std::size_t target_len);

// Exact orbit of a positive integer vector, run until it reaches g*e_j;
// returns the composed substitutions applied to j^g, whose Parikh vector
// equals v.  Throws LoopError when a state repeats (or F fixes the vector)
// and NonIntegerError when entries leave the integers.
Word s_adic_word_integer(const AlgorithmDef& algo, const IVec3& v);

// p(n) = number of distinct length-n factors, n = 0..n_max.
// Requires w.size() >= n_max.
std::vector<std::size_t> factor_complexity(const Word& w, std::size_t n_max);

// Max over prefixes k and letters i of |#i(w[0..k)) - k*v_i/(v1+v2+v3)|.
// Requires parikh(w) == v.
Rational discrepancy(const Word& w, const IVec3& v);

struct DiscrepancyEntry {
    enum class Status { Ok, Loop, NonInteger };
    IVec3 v;
    Status status;
    Rational value;      // valid when status == Ok
    std::string detail;  // offending vector for error entries
};

const char* to_string(DiscrepancyEntry::Status s);

// One entry per positive integer vector with v1+v2+v3 == total,
// in lexicographic order; per-vector failures are captured as entries.
std::vector<DiscrepancyEntry> discrepancy_statistics(const AlgorithmDef& algo,
                                                     std::int64_t total,
                                                     unsigned threads = 1);

}  // namespace mcf
