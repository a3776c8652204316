// Randomized verification suites over seeded Meixner parameter draws.
#pragma once

#include "meixner/json_io.hpp"
#include "meixner/meixner.hpp"
#include "meixner/operator_algebra.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace meixner {

enum class Suite { universal, pmd, gramschmidt, limit, doublecomm };

std::string to_string(Suite s);
/// Throws std::invalid_argument for unknown names.
Suite parse_suite(const std::string& name);

/// The six commutation identities at truncation N (capped by the support).
std::vector<VerifyReport> universal_checks(const MeixnerParams& p, std::size_t N);

/// Matrix-extracted decompositions of U, V, N, a0, a-, a+ against the closed
/// forms through order N, plus the Delta == 0 reduction and, when Delta is a
/// rational square, the exact translation forms.
std::vector<VerifyReport> pmd_checks(const MeixnerParams& p, std::size_t N);

/// Recurrence -> 2N moments -> Gram-Schmidt -> recurrence. For beta < 0 also
/// the position of the Hankel degeneracy.
std::vector<VerifyReport> gramschmidt_checks(const MeixnerParams& p, std::size_t N);

/// Requires Delta == 0: the two-term forms of U and N, and the derivative
/// translation forms of all six operators.
std::vector<VerifyReport> limit_checks(const MeixnerParams& p, std::size_t N);

/// [U,X] and [[U,X],X] against their closed forms.
std::vector<VerifyReport> doublecomm_checks(const MeixnerParams& p, std::size_t N);

struct TrialResult {
  std::size_t trial = 0;
  MeixnerParams params;
  std::vector<VerifyReport> checks;

  bool pass() const;
};

struct SuiteReport {
  Suite suite;
  std::size_t degree = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<TrialResult> results;  ///< ordered by trial index

  bool pass() const;
};

/// Draws `trials` parameter sets from `seed` (Delta == 0 draws for the limit
/// suite), then runs the trials on worker threads. The report does not depend
/// on the thread count. Throws std::invalid_argument if degree < 4.
SuiteReport run_suite(Suite suite, std::size_t degree, std::size_t trials, std::uint64_t seed);

Json to_json(const SuiteReport& report);

}  // namespace meixner
