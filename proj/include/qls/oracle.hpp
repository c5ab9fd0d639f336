#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qls/cfword.hpp"
#include "qls/laurent.hpp"
#include "qls/spectrum.hpp"

namespace qls {

/// One element of the orbit of alpha: beta = (A*root + B) / (C*root + D)
/// for a matrix with unit determinant, normalized projectively (first
/// nonzero coefficient in A,B,C,D scan order equals 1), applied to either
/// alpha or its Galois conjugate.
struct OrbitElement {
    Poly A, B, C, D;
    bool conjugate_root = false;     // built from alpha^sigma instead of alpha
    LaurentSeries beta, beta_sigma;
    int height_exponent = 0;         // -log_q |beta - beta^sigma|
};

/// Every projective class of matrices with entries of degree <= deg_bound
/// and unit determinant, applied to both roots. Complexity guard:
/// deg_bound <= 4. Series are trusted deep enough to certify the heights.
std::vector<OrbitElement> enumerate_orbit(const CFWord& alpha, int deg_bound);

/// Restricts attention to beta with lo <= -log_q|beta - beta^sigma| <= hi.
struct OrbitWindow {
    int lo;
    int hi;
};

struct BruteForceOutcome {
    enum class Verdict { Pass, Fail, EmptyWindow };
    Verdict verdict = Verdict::EmptyWindow;
    int fast_exponent = 0;  // approx_constant exponent claimed by the word path
    /// Exponent of the minimal ratio |f-beta| * h(beta) found in the window
    /// (= the largest per-element exponent). Soundness requires it never to
    /// exceed fast_exponent; attainment requires equality.
    std::optional<int> min_ratio_exponent;
    std::optional<OrbitElement> witness;  // attains the minimal ratio
    std::size_t window_population = 0;
    bool exhaustive = true;  // false under sampling: verdict checks soundness only
};

/// Measures |f - beta| / |beta - beta^sigma| through series arithmetic for
/// every enumerated orbit element in the window and compares against the
/// word-combinatoric constant. Series start at 4*(deg_bound + degree mass)
/// coefficients and deepen on demand up to the cap. Throws InTheta when f
/// is equivalent to alpha.
BruteForceOutcome brute_force_check(const CFWord& alpha, const CFWord& f, int deg_bound,
                                    OrbitWindow window, unsigned workers = 1);

/// Same check over `samples` matrices drawn uniformly from the bounded
/// enumeration space; Pass then means only that no sampled element beats
/// the fast path.
BruteForceOutcome brute_force_sample(const CFWord& alpha, const CFWord& f, int deg_bound,
                                     OrbitWindow window, std::size_t samples, std::uint64_t seed,
                                     unsigned workers = 1);

}  // namespace qls
