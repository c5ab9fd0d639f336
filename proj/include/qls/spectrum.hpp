#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qls/cfword.hpp"

namespace qls {

/// Quadratic approximation constant as an exact exponent: value q^-m for
/// Finite(m), or the axiomatic zero that every spectrum contains.
struct ApproxConstant {
    std::optional<int> exponent;  // nullopt encodes the zero entry

    static ApproxConstant finite(int m) { return {m}; }
    static ApproxConstant zero_axiomatic() { return {std::nullopt}; }
    bool is_zero() const { return !exponent.has_value(); }
};

/// Forward-match state of f's tail at position r against a purely periodic
/// word: t letters of the tail starting at r+1 coincide with the period
/// word, next_period_letter is the period letter the match failed on.
/// Throws InTheta when the match exceeds the Fine-Wilf bound |f period| +
/// |tau period| (the two periodic words would then coincide forever).
struct MatchContext {
    long r;
    long t;
    Poly next_period_letter;
    Poly last_period_letter;
};
MatchContext match_context(const CFWord& f, long r, const std::vector<Poly>& tau_period);

/// Exponent of |f - approximant| * h(approximant) for the approximant that
/// keeps f's first r letters and continues with the periodic word:
///
///   m(r) = 2*sum_{i=1..t} deg a_{r+i}
///        + deg a_r     + deg B_last - deg(a_r - B_last)
///        + deg a_{r+t+1} + deg B_next - deg(a_{r+t+1} - B_next)
///
/// nullopt (skip) when a_r equals the period's last letter: that word is
/// non-canonical and the same approximant reappears under a rotated variant.
/// Requires r >= 1 and a canonical quadratic f; tau_period primitive.
std::optional<int> approximant_ratio_exponent(const CFWord& f, long r, const std::vector<Poly>& tau_period);

/// liminf over r of |f - alpha_r| * h(alpha_r) for one twisted/rotated/
/// mirrored variant, as an exponent: the minimum recurring ratio value is
/// q^-(max of the per-position exponents), scanned over scan_periods full
/// periods of f's tail inside the periodic regime. nullopt when every
/// position skips.
std::optional<int> variant_liminf_exponent(const CFWord& f, const std::vector<Poly>& alpha_period,
                                           const TwistSpec& spec, int scan_periods = 1);

/// c_alpha(f) as an exponent: the minimum ratio value over every variant,
/// i.e. the maximum exponent over the variant liminfs. Always >= 2. Throws
/// InTheta when f lies in alpha's orbit.
int approx_constant_exponent(const CFWord& alpha, const CFWord& f);
ApproxConstant approx_constant(const CFWord& alpha, const CFWord& f);

/// Certified start of the Hall ray. coarse = 2d(s+1); refined places a
/// maximal-degree letter last and adds the cheapest follower:
/// 2*sum(deg b_i) + d + min{deg b_{j+1} : deg b_j = d}. refined <= coarse.
struct HallBound {
    int coarse;
    int refined;
};
HallBound hall_bound(const CFWord& alpha);

/// Whether q^-m lies in Sp(alpha). Enumerates the structured candidate
/// periods P1 * W0 * P2 (W0 a factor of a twisted/mirrored variant word,
/// P1, P2 nonconstant of degree <= d+1) and tests for an exact exponent hit.
bool membership(const CFWord& alpha, int m, unsigned workers = 1);

/// The candidate words membership scans for exponents up to max_exponent,
/// deduplicated and orbit-filtered.
std::vector<CFWord> membership_candidates(const CFWord& alpha, int max_exponent);

struct SpectrumReport {
    unsigned q = 0;
    std::string alpha;                     // canonical word literal
    std::vector<Poly> alpha_period;
    std::vector<int> exponents_below_bound;  // members m with 2 <= m < hall_start
    int hall_start = 0;                      // refined bound; every m >= hall_start is present
    int hall_bound_coarse = 0;
    int hurwitz_exponent = 0;                // minimum present exponent = max Sp(alpha)
    int verification_margin = 0;
    bool contains_zero = true;               // axiomatic, by the cited measure-theoretic result
    bool zero_is_axiomatic = true;
};

/// Full spectrum scan: one candidate enumeration bounded by
/// refined + verification_margin answers membership for every m in range.
/// Throws HallBoundViolation if any m in [refined, refined+margin] is
/// missing (that would falsify the certified ray).
SpectrumReport spectrum(const CFWord& alpha, int verification_margin = 5, unsigned workers = 1);

/// Smallest present exponent (Hw(alpha) = q^-result).
int hurwitz_exponent(const CFWord& alpha, unsigned workers = 1);

/// Membership of every m in [refined, refined+margin]; throws
/// HallBoundViolation on the first failure.
void certify_hall_ray(const CFWord& alpha, int margin = 5, unsigned workers = 1);

}  // namespace qls
