#include "qls/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>

#include "qls/errors.hpp"
#include "qls/parallel.hpp"

namespace qls {

namespace {

// Immutable per-alpha state shared by every candidate evaluation.
struct AlphaContext {
    CFWord alpha;
    std::vector<std::vector<Poly>> variants;  // primitive periods of all orbit tails
    int s = 0;
    int d = 0;

    explicit AlphaContext(const CFWord& alpha_in) : alpha(canonicalize(alpha_in)) {
        if (!alpha.quadratic()) throw NotQuadratic();
        s = int(alpha.period.size());
        for (const Poly& b : alpha.period) d = std::max(d, b.deg());
        variants = orbit_tail_periods(alpha.period);
    }

    bool in_theta(const CFWord& f_canonical) const {
        for (const auto& v : variants)
            if (v == f_canonical.period) return true;
        return false;
    }
};

std::optional<int> scan_variant(const CFWord& f, const std::vector<Poly>& tau, int scan_periods) {
    const long pf = long(f.period.size());
    const long r0 = long(f.preperiod.size()) + pf + 2 * long(tau.size()) + 1;
    std::optional<int> best;
    for (long k = 0; k < pf * scan_periods; ++k) {
        const std::optional<int> e = approximant_ratio_exponent(f, r0 + k, tau);
        if (e && (!best || *e > *best)) best = e;
    }
    return best;
}

int constant_exponent(const AlphaContext& cx, const CFWord& f) {
    if (!f.quadratic()) throw NotQuadratic();
    if (cx.in_theta(f)) throw InTheta();
    std::optional<int> best;
    for (const auto& tau : cx.variants) {
        const std::optional<int> e = scan_variant(f, tau, 1);
        if (e && (!best || *e > *best)) best = e;
    }
    if (!best) throw InTheta();  // every position of every variant skipped
    assert(*best >= 2);
    return *best;
}

}  // namespace

MatchContext match_context(const CFWord& f, long r, const std::vector<Poly>& tau) {
    assert(r >= 1 && !tau.empty() && f.quadratic());
    const long L = long(tau.size());
    const long fine_wilf = long(f.period.size()) + L;
    long t = 0;
    while (f.letter(r + 1 + t) == tau[std::size_t(t % L)]) {
        ++t;
        if (t > fine_wilf) throw InTheta();  // tails coincide forever
    }
    return MatchContext{r, t, tau[std::size_t(t % L)], tau.back()};
}

std::optional<int> approximant_ratio_exponent(const CFWord& f, long r, const std::vector<Poly>& tau) {
    const Poly& ar = f.letter(r);
    if (ar == tau.back()) return std::nullopt;  // non-canonical join; covered by a rotated variant
    const MatchContext mc = match_context(f, r, tau);
    int sum = 0;
    for (long i = 1; i <= mc.t; ++i) sum += f.letter(r + i).deg();
    const Poly& an = f.letter(r + mc.t + 1);
    const Poly d_head = ar - tau.back();
    const Poly d_tail = an - mc.next_period_letter;  // nonzero: the match stopped here
    const int e = 2 * sum + ar.deg() + tau.back().deg() - d_head.deg() + an.deg() +
                  mc.next_period_letter.deg() - d_tail.deg();
    assert(e >= 2);
    return e;
}

std::optional<int> variant_liminf_exponent(const CFWord& f_in, const std::vector<Poly>& alpha_period,
                                           const TwistSpec& spec, int scan_periods) {
    const CFWord f = canonicalize(f_in);
    if (!f.quadratic()) throw NotQuadratic();
    return scan_variant(f, tau_period(alpha_period, spec), std::max(1, scan_periods));
}

int approx_constant_exponent(const CFWord& alpha, const CFWord& f) {
    const AlphaContext cx(alpha);
    return constant_exponent(cx, canonicalize(f));
}

ApproxConstant approx_constant(const CFWord& alpha, const CFWord& f) {
    return ApproxConstant::finite(approx_constant_exponent(alpha, f));
}

HallBound hall_bound(const CFWord& alpha_in) {
    const CFWord alpha = canonicalize(alpha_in);
    if (!alpha.quadratic()) throw NotQuadratic();
    const std::size_t s = alpha.period.size();
    int d = 0, degsum = 0;
    for (const Poly& b : alpha.period) {
        d = std::max(d, b.deg());
        degsum += b.deg();
    }
    int follower = d;
    for (std::size_t j = 0; j < s; ++j)
        if (alpha.period[j].deg() == d)
            follower = std::min(follower, alpha.period[(j + 1) % s].deg());
    HallBound hb{2 * d * (int(s) + 1), 2 * degsum + d + follower};
    assert(hb.refined <= hb.coarse);
    return hb;
}

namespace {

// Candidate periods P1 W0 P2 for every exponent in [2, max_exponent]: W0 is
// a factor of some variant word with degree sum <= (max_exponent - 2) / 2
// (at the realizing position the exponent is at least 2*sum(deg W0) + 2, so
// heavier factors cannot hit the target), P1 and P2 are nonconstant of
// degree <= d+1. Deduplicated by rotation and alternating twist, both of
// which preserve the constant, and filtered against alpha's orbit.
std::vector<CFWord> build_candidates(const AlphaContext& cx, int max_exponent) {
    const FieldCtx& f = cx.alpha.field();
    std::vector<CFWord> out;
    if (max_exponent < 2) return out;
    const int w0_degsum_max = (max_exponent - 2) / 2;

    std::set<std::vector<Poly>> factors;
    factors.insert(std::vector<Poly>{});
    for (const auto& v : cx.variants) {
        const std::size_t L = v.size();
        for (std::size_t start = 0; start < L; ++start) {
            std::vector<Poly> w;
            int degsum = 0;
            for (std::size_t k = 0;; ++k) {
                const Poly& letter = v[(start + k) % L];
                degsum += letter.deg();
                if (degsum > w0_degsum_max) break;
                w.push_back(letter);
                factors.insert(w);
            }
        }
    }

    const std::vector<Poly> ends = enumerate_polys(f, 1, cx.d + 1);
    std::set<std::vector<Poly>> seen;
    for (const Poly& p1 : ends) {
        for (const auto& w0 : factors) {
            for (const Poly& p2 : ends) {
                CFWord cand;
                cand.a0 = Poly::zero(f);
                cand.period.reserve(w0.size() + 2);
                cand.period.push_back(p1);
                cand.period.insert(cand.period.end(), w0.begin(), w0.end());
                cand.period.push_back(p2);
                cand = canonicalize(std::move(cand));
                if (!seen.insert(necklace_twist_key(cand.period)).second) continue;
                if (cx.in_theta(cand)) continue;
                out.push_back(std::move(cand));
            }
        }
    }
    return out;
}

// Exponents attained by the candidates, restricted to [2, m_max]: the
// candidate set is only complete up to that bound. Merging through an
// atomic flag per exponent keeps the union order-independent.
std::set<int> exponents_present(const AlphaContext& cx, const std::vector<CFWord>& candidates,
                                int m_max, unsigned workers) {
    std::vector<std::atomic<bool>> hit(std::size_t(std::max(m_max, 2)) + 1);
    for (auto& h : hit) h.store(false, std::memory_order_relaxed);
    parallel_for(candidates.size(), workers, [&](std::size_t i) {
        const int e = constant_exponent(cx, candidates[i]);
        if (e <= m_max) hit[std::size_t(e)].store(true, std::memory_order_relaxed);
    });
    std::set<int> present;
    for (int m = 2; m <= m_max; ++m)
        if (hit[std::size_t(m)].load()) present.insert(m);
    return present;
}

}  // namespace

std::vector<CFWord> membership_candidates(const CFWord& alpha, int max_exponent) {
    const AlphaContext cx(alpha);
    return build_candidates(cx, max_exponent);
}

bool membership(const CFWord& alpha, int m, unsigned workers) {
    if (m < 2) return false;  // the whole spectrum sits at exponents >= 2
    const AlphaContext cx(alpha);
    const std::vector<CFWord> candidates = build_candidates(cx, m);
    std::atomic<bool> found{false};
    parallel_for(
        candidates.size(), workers,
        [&](std::size_t i) {
            if (constant_exponent(cx, candidates[i]) == m) found.store(true, std::memory_order_relaxed);
        },
        &found);
    return found.load();
}

SpectrumReport spectrum(const CFWord& alpha_in, int verification_margin, unsigned workers) {
    const AlphaContext cx(alpha_in);
    const HallBound hb = hall_bound(cx.alpha);
    const int margin = std::max(0, verification_margin);
    const int m_max = hb.refined + margin;

    const std::vector<CFWord> candidates = build_candidates(cx, m_max);
    const std::set<int> present = exponents_present(cx, candidates, m_max, workers);

    for (int m = hb.refined; m <= m_max; ++m)
        if (!present.count(m)) throw HallBoundViolation(m);

    SpectrumReport rep;
    rep.q = cx.alpha.field().q();
    rep.alpha = format_cfword(cx.alpha);
    rep.alpha_period = cx.alpha.period;
    rep.hall_start = hb.refined;
    rep.hall_bound_coarse = hb.coarse;
    rep.verification_margin = margin;
    for (int m : present)
        if (m < hb.refined) rep.exponents_below_bound.push_back(m);
    rep.hurwitz_exponent = *present.begin();
    return rep;
}

int hurwitz_exponent(const CFWord& alpha, unsigned workers) {
    const AlphaContext cx(alpha);
    const HallBound hb = hall_bound(cx.alpha);
    for (int m = 2; m <= hb.refined; ++m)
        if (membership(cx.alpha, m, workers)) return m;
    // the refined bound itself is in the ray; reaching here is inconsistent
    throw HallBoundViolation(hb.refined);
}

void certify_hall_ray(const CFWord& alpha, int margin, unsigned workers) {
    const AlphaContext cx(alpha);
    const HallBound hb = hall_bound(cx.alpha);
    for (int m = hb.refined; m <= hb.refined + std::max(0, margin); ++m)
        if (!membership(cx.alpha, m, workers)) throw HallBoundViolation(m);
}

}  // namespace qls
