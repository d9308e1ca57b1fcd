#include "mcf/sadic.hpp"

#include <algorithm>
#include <set>
#include <thread>
#include <unordered_set>

namespace mcf {

namespace {

constexpr std::size_t kMaxCompositions = 1000;

struct WordBuilder {
    std::array<Word, 3> images{Word("1"), Word("2"), Word("3")};
    std::array<int, 3> first_letter_map{1, 2, 3};  // psi: letter -> first letter of tau(letter)
    int anchor = 0;                                // first letter of sigma_{i1}(1)
    std::size_t compositions = 0;
    std::size_t cap;

    explicit WordBuilder(std::size_t max_len) : cap(std::max<std::size_t>(max_len, 4)) {}

    void extend(const Substitution& s) {
        std::array<Word, 3> next;
        for (int j = 0; j < 3; ++j) {
            Word& w = next[static_cast<std::size_t>(j)];
            for (char c : s.images[static_cast<std::size_t>(j)]) {
                if (w.size() >= cap) break;
                w += images[static_cast<std::size_t>(c - '1')];
            }
            if (w.size() > cap) w.resize(cap);
        }
        images = next;
        std::array<int, 3> psi;
        for (int c = 0; c < 3; ++c) {
            const char f = s.images[static_cast<std::size_t>(c)].front();
            psi[static_cast<std::size_t>(c)] = first_letter_map[static_cast<std::size_t>(f - '1')];
        }
        first_letter_map = psi;
        if (++compositions == 1) anchor = psi[0];
    }

    int seed_letter() const {
        for (int c = 0; c < 3; ++c)
            if (first_letter_map[static_cast<std::size_t>(c)] == anchor) return c;
        return 0;
    }

    Word word(std::size_t max_len) const {
        Word w = images[static_cast<std::size_t>(seed_letter())];
        if (w.size() > max_len) w.resize(max_len);
        return w;
    }
};

// Advances the coding orbit; false once the orbit degenerates.
struct CodingStream {
    const AlgorithmDef& algo;
    Vec3 x;
    bool alive = true;

    const Branch* next() {
        if (!alive) return nullptr;
        try {
            auto [b, y] = step(algo, x);
            x = y;
            return b;
        } catch (const DomainError&) {
            alive = false;
            return nullptr;
        }
    }
};

Word build_word(const AlgorithmDef& algo, const Vec3& v, std::size_t max_len,
                std::size_t n_compositions, bool grow_to_len) {
    WordBuilder builder(max_len);
    CodingStream stream{algo, v};
    while (builder.compositions < n_compositions) {
        const Branch* b = stream.next();
        if (!b) break;
        builder.extend(b->substitution);
    }
    if (grow_to_len) {
        while (builder.word(max_len).size() < max_len) {
            if (builder.compositions >= kMaxCompositions)
                throw StallError("word still shorter than " + std::to_string(max_len) +
                                 " letters after composing " +
                                 std::to_string(builder.compositions) + " substitutions");
            const Branch* b = stream.next();
            if (!b)
                throw StallError("orbit of " + algo.name + " degenerates after " +
                                 std::to_string(builder.compositions) +
                                 " compositions, word has only " +
                                 std::to_string(builder.word(max_len).size()) + " letters");
            builder.extend(b->substitution);
        }
    }
    return builder.word(max_len);
}

// Integer inverse matrices for the unimodular branches of one algorithm;
// entries for |det| != 1 branches are unused.
std::vector<IMat3> integer_inverses(const AlgorithmDef& algo) {
    std::vector<IMat3> out(algo.branches.size());
    for (std::size_t k = 0; k < algo.branches.size(); ++k) {
        const Branch& b = algo.branches[k];
        if (b.determinant != 1 && b.determinant != -1) continue;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                out[k][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    static_cast<std::int64_t>(numerator(b.inverse[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    }
    return out;
}

// Exact integer step; Reverse branch 4 needs an even coordinate sum.
IVec3 integer_step(const Branch& b, const IMat3& int_inverse, const IVec3& x) {
    if (b.determinant == 2) {  // Reverse branch 4: y_i = (s - 2 x_i) / 2
        const std::int64_t s = x[0] + x[1] + x[2];
        if (s % 2 != 0) {
            const Vec3 half{(s - 2.0 * x[0]) / 2.0, (s - 2.0 * x[1]) / 2.0,
                            (s - 2.0 * x[2]) / 2.0};
            throw NonIntegerError("", format_vec(half));
        }
        return {s / 2 - x[0], s / 2 - x[1], s / 2 - x[2]};
    }
    return multiply(int_inverse, x);
}

}  // namespace

Word s_adic_word(const AlgorithmDef& algo, const Vec3& v, std::size_t max_len,
                 std::size_t n_compositions) {
    return build_word(algo, v, max_len, n_compositions, false);
}

Word s_adic_prefix(const AlgorithmDef& algo, const Vec3& v, std::size_t target_len) {
    if (target_len == 0) return {};
    return build_word(algo, v, target_len, 100, true);
}

Word s_adic_word_integer(const AlgorithmDef& algo, const IVec3& v) {
    for (auto c : v)
        if (c < 0) throw DegenerateInputError("integer direction must be non-negative");
    const std::string input =
        "[" + std::to_string(v[0]) + ", " + std::to_string(v[1]) + ", " + std::to_string(v[2]) + "]";
    auto fail_loop = [&](const IVec3& u) {
        const Vec3 ud{static_cast<double>(u[0]), static_cast<double>(u[1]),
                      static_cast<double>(u[2])};
        throw LoopError("On input=" + input + ", algorithm " + algo.name + " loops on " +
                            format_vec(ud),
                        format_vec(ud));
    };

    const std::vector<IMat3> inverses = integer_inverses(algo);
    IVec3 x = v;
    std::set<IVec3> seen{x};
    std::vector<int> labels;
    for (;;) {
        int nonzero = -1, count = 0;
        for (int i = 0; i < 3; ++i)
            if (x[static_cast<std::size_t>(i)] != 0) {
                nonzero = i;
                ++count;
            }
        if (count == 0) throw DegenerateInputError("zero vector");
        if (count == 1) {
            // terminal state g*e_j: apply the recorded compositions to j^g
            Word w(static_cast<std::size_t>(x[static_cast<std::size_t>(nonzero)]), static_cast<char>('1' + nonzero));
            for (auto it = labels.rbegin(); it != labels.rend(); ++it)
                w = mcf::apply(algo.branches[static_cast<std::size_t>(*it)].substitution, w);
            return w;
        }
        const int idx = algo.classify_index(x);
        const Branch& b = algo.branches[static_cast<std::size_t>(idx)];
        IVec3 y;
        try {
            y = integer_step(b, inverses[static_cast<std::size_t>(idx)], x);
        } catch (const NonIntegerError& e) {
            throw NonIntegerError("On input=" + input + ", algorithm " + algo.name +
                                      " reaches non integer entries " + e.vector_repr(),
                                  e.vector_repr());
        }
        if (!seen.insert(y).second) fail_loop(y);
        labels.push_back(idx);
        x = y;
    }
}

std::vector<std::size_t> factor_complexity(const Word& w, std::size_t n_max) {
    if (w.size() < n_max)
        throw DomainError("word of length " + std::to_string(w.size()) +
                          " is too short for factor complexity up to " + std::to_string(n_max));
    std::vector<std::size_t> p;
    p.reserve(n_max + 1);
    p.push_back(1);  // the empty factor
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::unordered_set<std::string_view> factors;
        for (std::size_t i = 0; i + n <= w.size(); ++i)
            factors.insert(std::string_view(w).substr(i, n));
        p.push_back(factors.size());
    }
    return p;
}

Rational discrepancy(const Word& w, const IVec3& v) {
    if (parikh(w) != v)
        throw DomainError("Parikh vector of word does not match direction " + format_vec(v));
    const std::int64_t s = v[0] + v[1] + v[2];
    if (s == 0) throw DomainError("zero direction");
    // max_k max_i |count_i(prefix k) - k v_i / s| = (max of integer deviations) / s
    std::int64_t best = 0;
    IVec3 counts{0, 0, 0};
    for (std::size_t k = 1; k <= w.size(); ++k) {
        ++counts[static_cast<std::size_t>(w[k - 1] - '1')];
        for (int i = 0; i < 3; ++i) {
            const std::int64_t dev =
                counts[static_cast<std::size_t>(i)] * s - static_cast<std::int64_t>(k) * v[static_cast<std::size_t>(i)];
            best = std::max(best, dev < 0 ? -dev : dev);
        }
    }
    return Rational(best, s);
}

const char* to_string(DiscrepancyEntry::Status s) {
    switch (s) {
        case DiscrepancyEntry::Status::Ok: return "ok";
        case DiscrepancyEntry::Status::Loop: return "LoopError";
        case DiscrepancyEntry::Status::NonInteger: return "NonIntegerError";
    }
    return "?";
}

std::vector<DiscrepancyEntry> discrepancy_statistics(const AlgorithmDef& algo,
                                                     std::int64_t total, unsigned threads) {
    if (total < 3) throw DomainError("total must be at least 3");
    std::vector<IVec3> vectors;
    for (std::int64_t a = 1; a <= total - 2; ++a)
        for (std::int64_t b = 1; b <= total - 1 - a; ++b) vectors.push_back({a, b, total - a - b});

    std::vector<DiscrepancyEntry> out(vectors.size());
    auto run = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            DiscrepancyEntry& e = out[i];
            e.v = vectors[i];
            try {
                const Word w = s_adic_word_integer(algo, vectors[i]);
                e.value = discrepancy(w, vectors[i]);
                e.status = DiscrepancyEntry::Status::Ok;
            } catch (const LoopError& err) {
                e.status = DiscrepancyEntry::Status::Loop;
                e.detail = err.vector_repr();
            } catch (const NonIntegerError& err) {
                e.status = DiscrepancyEntry::Status::NonInteger;
                e.detail = err.vector_repr();
            }
        }
    };

    if (threads <= 1 || vectors.size() < 256) {
        run(0, vectors.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (vectors.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t b = t * chunk;
            if (b >= vectors.size()) break;
            pool.emplace_back(run, b, std::min(vectors.size(), b + chunk));
        }
        for (auto& th : pool) th.join();
    }
    return out;
}

}  // namespace mcf
