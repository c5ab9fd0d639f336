#pragma once

#include <cstdlib>
#include <random>
#include <vector>

#include "qls/cfword.hpp"
#include "qls/laurent.hpp"
#include "qls/poly.hpp"

namespace qls::testing {

inline std::uint64_t env_seed(std::uint64_t fallback) {
    if (const char* s = std::getenv("QLS_SEED")) return std::strtoull(s, nullptr, 10);
    return fallback;
}

inline Poly random_poly(const FieldCtx& f, std::mt19937_64& rng, int min_deg, int max_deg) {
    std::uniform_int_distribution<int> degree(min_deg, max_deg);
    std::uniform_int_distribution<unsigned> code(0, f.q() - 1);
    std::uniform_int_distribution<unsigned> lead(1, f.q() - 1);
    const int d = degree(rng);
    if (d < 0) return Poly::zero(f);
    std::vector<FieldElement> c(std::size_t(d) + 1);
    for (int i = 0; i < d; ++i) c[std::size_t(i)] = FieldElement(code(rng));
    c.back() = FieldElement(lead(rng));
    return Poly::from_coeffs(f, std::move(c));
}

struct WordShape {
    int max_a0_deg = 2;       // -1 forces a0 = 0
    int max_preperiod = 2;
    int min_period = 1;
    int max_period = 3;
    int max_letter_deg = 3;
};

inline CFWord random_word(const FieldCtx& f, std::mt19937_64& rng, const WordShape& shape = {}) {
    CFWord w;
    if (shape.max_a0_deg < 0) {
        w.a0 = Poly::zero(f);
    } else {
        // degree -1 stands for the zero polynomial
        w.a0 = random_poly(f, rng, -1, shape.max_a0_deg);
    }
    std::uniform_int_distribution<int> pre_len(0, shape.max_preperiod);
    std::uniform_int_distribution<int> per_len(shape.min_period, shape.max_period);
    const int r = pre_len(rng), s = per_len(rng);
    for (int i = 0; i < r; ++i) w.preperiod.push_back(random_poly(f, rng, 1, shape.max_letter_deg));
    for (int i = 0; i < s; ++i) w.period.push_back(random_poly(f, rng, 1, shape.max_letter_deg));
    return canonicalize(std::move(w));
}

inline bool series_agree(const LaurentSeries& a, const LaurentSeries& b) {
    return (a - b).is_zero_to_prec();
}

}  // namespace qls::testing
