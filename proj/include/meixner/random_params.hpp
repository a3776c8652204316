// Seeded draws of Meixner parameters and translation combinations.
//
// Integers are drawn with plain modular reduction on std::mt19937_64, whose
// output sequence is fixed by the standard, so a seed reproduces the same
// draws on every platform.
#pragma once

#include "meixner/meixner.hpp"
#include "meixner/translation.hpp"

#include <cstdint>
#include <random>

namespace meixner {

using Rng = std::mt19937_64;

/// Uniform on [lo, hi].
long draw_int(Rng& rng, long lo, long hi);

/// n/q with q in 1..max_den and lo <= n/q <= hi.
Rat draw_rat(Rng& rng, const Rat& lo, const Rat& hi, long max_den = 4);

/// Valid parameters with alpha in [0,3], alpha0 in [-2,2], beta in [-2,2],
/// t in (0,3]. Negative beta snaps t to a multiple of -beta. Most of the
/// draws are unconstrained; the rest target the measure-zero classes
/// (beta == 0, alpha^2 == 4 beta, and a square alpha^2 - 4 beta).
MeixnerParams draw_params(Rng& rng);

/// Valid parameters with alpha^2 == 4 beta (including alpha == beta == 0).
MeixnerParams draw_params_delta_zero(Rng& rng);

/// A combination passing validate_combo: one to three nonzero shifts in
/// [-3, 3] with c_i/d_i > 0, balanced by a term at shift 0 when needed.
TranslationCombo draw_combo(Rng& rng);

}  // namespace meixner
