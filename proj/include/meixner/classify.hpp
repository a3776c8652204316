// The six classes of Meixner distributions, their parameters as affine images
// of standard distributions, and exact moment cross-checks.
#pragma once

#include "meixner/meixner.hpp"
#include "meixner/operator_algebra.hpp"
#include "meixner/orthopoly.hpp"
#include "meixner/surd.hpp"

#include <array>
#include <string>
#include <variant>
#include <vector>

namespace meixner {

/// Normal(mean, variance).
struct GaussianClass {
  Rat mean;
  Rat variance;
};

/// X = scale * Y + shift, Y ~ Poisson(lambda).
struct PoissonClass {
  Rat lambda;
  Rat scale;
  Rat shift;
};

/// X = scale * Y + shift, Y ~ NegativeBinomial(r, p) on {0, 1, ..}, with
/// P(Y = k) = Gamma(r+k)/(k! Gamma(r)) p^r (1-p)^k and scale = d.
struct PascalClass {
  Surd d;  ///< sqrt(alpha^2 - 4 beta)
  Surd p;
  Rat r;
  Surd scale;
  Surd shift;
};

/// X = scale * G + shift, G ~ Gamma(shape, 1).
struct GammaClass {
  Rat shape;
  Rat scale;
  Rat shift;
};

/// Density c e^{2 theta x/gamma} |Gamma(k + i x gamma)|^2 up to translation;
/// gamma + i alpha = r e^{i theta}. The normalizing constant c is left symbolic.
struct HyperbolicSecantClass {
  Surd gamma;  ///< sqrt(4 beta - alpha^2)
  Surd r;      ///< sqrt(4 beta)
  Surd k;      ///< 2t/(r gamma)
  Surd tan_theta;  ///< alpha/gamma
  double theta = 0.0;
};

/// X = scale * Y + shift, Y ~ Binomial(n, p). Both roots p and 1 - p describe
/// the same law, the second with the opposite scale.
struct BinomialClass {
  Rat n;
  Rat c;  ///< -alpha^2/beta
  Surd p;
  Surd scale;
  Surd shift;
  Surd p_alt;
  Surd scale_alt;
  Surd shift_alt;
};

using MeixnerClass =
    std::variant<GaussianClass, PoissonClass, PascalClass, GammaClass, HyperbolicSecantClass, BinomialClass>;

/// "Gaussian", "Poisson", "Pascal", "Gamma", "HyperbolicSecant", "Binomial".
std::string class_name(const MeixnerClass& cls);

/// 1-based position in the list above.
int class_number(const MeixnerClass& cls);

/// The six class predicates evaluated independently; on valid parameters
/// exactly one is true.
std::array<bool, 6> class_predicates(const MeixnerParams& p);

/// Throws InvalidParams.
MeixnerClass classify(const MeixnerParams& p);

/// Raw moments E[X^0..X^M] computed from the standard distribution and the
/// affine map. Irrational parameters are handled exactly in Q(sqrt(Delta)).
/// Throws Unsupported for the hyperbolic secant class.
MomentSeq distribution_moments(const MeixnerClass& cls, std::size_t M);

/// Binomial moments for one root: branch 0 uses p, branch 1 uses p_alt.
MomentSeq binomial_moments(const BinomialClass& cls, std::size_t M, int branch);

/// Recurrence moments against distribution_moments through order M. For the
/// binomial class both roots are compared. Throws Unsupported for the
/// hyperbolic secant class.
VerifyReport crosscheck(const MeixnerParams& p, std::size_t M);

/// For beta < 0: the recurrence moments must have a Hankel matrix that is
/// positive through order n and singular at order n + 1.
VerifyReport binomial_support_check(const MeixnerParams& p);

}  // namespace meixner
