#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qls/poly.hpp"

namespace qls {

/// Eventually periodic continued-fraction word
///
///   [a0; p_1, ..., p_r, overline(b_1, ..., b_s)]
///
/// a0 may be any polynomial (including 0); every other letter must be
/// nonconstant. An empty period means a finite expansion, i.e. a rational
/// function; a nonempty period means the represented power series is
/// quadratic over F_q(Y).
///
/// Canonical form (produced by canonicalize): the period is primitive, and
/// the last preperiod letter differs from the last period letter. Canonical
/// words represent their series uniquely.
struct CFWord {
    Poly a0;
    std::vector<Poly> preperiod;
    std::vector<Poly> period;

    const FieldCtx& field() const { return a0.field(); }
    bool quadratic() const { return !period.empty(); }
    bool operator==(const CFWord& o) const {
        return a0 == o.a0 && preperiod == o.preperiod && period == o.period;
    }
    bool operator!=(const CFWord& o) const { return !(*this == o); }

    /// Tail letter a_i for i >= 1 (preperiod first, then the period cycling
    /// forever). Requires a nonempty period or i within the preperiod.
    const Poly& letter(long i) const;
    /// Number of tail letters; LONG_MAX-ish sentinel when periodic.
    long letter_count() const;
};

/// Enforces the canonical form without changing the represented series:
/// reduces the period to its primitive root (border test), then absorbs
/// preperiod letters equal to the last period letter by rotating the period
/// right. Idempotent. Throws ConstantPartialQuotient on constant letters.
CFWord canonicalize(CFWord w);

bool is_canonical(const CFWord& w);

/// Purely periodic means the letter sequence a0, a1, ... is periodic from
/// the start, i.e. the preperiod is empty and a0 equals the last period
/// letter (so a0 is also nonconstant).
bool is_purely_periodic(const CFWord& w);

/// Letter-wise negation, a0 included. Represents -series(w).
CFWord negated(const CFWord& w);

enum class Parity { Even, Odd };

/// Alternating twist by a unit a: letter i is scaled by a^(+-1) with
/// exponent +1 at even indices (a0 = index 0) for Parity::Even, flipped for
/// Parity::Odd. Even twists represent a * series(w), odd ones a^-1 *
/// series(w). Output is canonical; an odd primitive period doubles first
/// when a != a^-1.
CFWord twist(const CFWord& w, FieldElement a, Parity start_parity);

/// Selects one purely periodic word from the orbit family of a period:
/// rotation starting at index j (1-based), alternately twisted by a starting
/// with exponent +1, and, when mirrored, built on the reversed cyclic word
/// starting at index j-1 with exponent -1 first. Result is canonical.
struct TwistSpec {
    int j = 1;
    FieldElement a = 1;
    bool mirrored = false;
};
CFWord select_tau(const std::vector<Poly>& base_period, const TwistSpec& spec);

/// The cyclic letter sequence of select_tau as a plain list (one primitive
/// period, starting phase included). This is the form the approximation
/// formulas consume.
std::vector<Poly> tau_period(const std::vector<Poly>& base_period, const TwistSpec& spec);

/// Convergent pairs p_k/q_k for k = -1, 0, ..., n with the standard
/// recurrence p_k = a_k p_{k-1} + p_{k-2} seeded p_{-1} = 1, q_{-1} = 0,
/// p_0 = a0, q_0 = 1. Index k = 0 corresponds to a0.
struct Convergents {
    std::vector<Poly> ps, qs;  // ps[k + 1] = p_k

    const Poly& p(long k) const { return ps[std::size_t(k + 1)]; }
    const Poly& q(long k) const { return qs[std::size_t(k + 1)]; }
    long last_index() const { return long(ps.size()) - 2; }
};

Convergents convergents(const CFWord& w, long n);
Convergents convergents_of_letters(const Poly& a0, const std::vector<Poly>& letters);

/// Galois conjugate of a purely periodic word: reverse the cyclic letter
/// sequence and negate every letter. Throws NotPurelyPeriodic otherwise.
CFWord galois_conjugate_period(const CFWord& w);

/// Coefficients of the quadratic minimal relation A x^2 + B x + C = 0 for
/// the series of w, normalized content-free with A monic. B is nonzero in
/// every characteristic. Throws NotQuadratic when the period is empty.
struct QuadraticMinPoly {
    Poly A, B, C;
};
QuadraticMinPoly minimal_polynomial(const CFWord& w);

/// Exponent e with h(series) = 1/|series - conjugate| = q^e. Computed from
/// the word alone: with preperiod a_1..a_r and period ending b_s,
///   e = 2*sum(deg a_i) - deg a_r - deg b_s + deg(a_r - b_s)      (r >= 1)
///   e = -deg b_s                                                 (r = 0)
/// a0 never enters. Throws NotQuadratic.
int height_exponent(const CFWord& w);

/// Exponent e with |series(f) - series(g)| = q^-e, or nullopt when the two
/// words denote the same series. Words with differing a0 return
/// e = -deg(a0_f - a0_g). Accepts rational words.
std::optional<int> distance_exponent(const CFWord& f, const CFWord& g);

/// Whether f lies in the projective orbit of g (equivalently g in f's):
/// true iff f's primitive period equals some rotation of g's period or of
/// its reverse, alternately twisted by some unit in either parity. Throws
/// NotQuadratic unless both are quadratic.
bool equivalent(const CFWord& f, const CFWord& g);

/// Tail degree statistics over one primitive period: M = max letter degree,
/// m = min, M2 = max over cyclically adjacent pairs of the degree sum.
struct WordStats {
    int M, M2, m;
};
WordStats cf_stats(const CFWord& w);

/// Literal grammar: `[a0; p1, ..., pr | b1, ..., bs]`; the part before `|`
/// is the preperiod and may be empty, polynomials use the poly grammar. A
/// form without `|` is a finite expansion.
CFWord parse_cfword(const std::string& text, const FieldCtx& f);
std::string format_cfword(const CFWord& w);

/// Word over the given alphabet in which every block of `order` letters
/// occurs exactly once cyclically (standard Lyndon-word concatenation
/// construction); the overload uses all degree-k polynomials as letters.
std::vector<Poly> de_bruijn_word(const std::vector<Poly>& alphabet, int order);
std::vector<Poly> de_bruijn_word(const FieldCtx& f, int k, int order);

/// Lexicographically-least representative of the period under rotation and
/// alternating unit twists in both parities. Periods with equal keys carry
/// identical approximation behaviour toward every alpha.
std::vector<Poly> necklace_twist_key(const std::vector<Poly>& period);

/// Primitive periods of every purely periodic tail in the orbit of a word
/// with this period: all rotations of the period and of its reverse under
/// every alternating unit twist, deduplicated. Both alternation parities are
/// covered because a parity flip equals twisting by the inverse unit.
std::vector<std::vector<Poly>> orbit_tail_periods(const std::vector<Poly>& period);

}  // namespace qls
