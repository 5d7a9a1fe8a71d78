/**
 * @file search.hpp
 * @brief Randomized search for large |H_2(n)| among sampled members of U.
 *
 * Evidence only: a bounded search over polynomial Schwarz functions can
 * refute a conjectured bound but never establish one.
 */
#ifndef HANKELKIT_SEARCH_HPP
#define HANKELKIT_SEARCH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>

#include "hankelkit/detail/rng.hpp"
#include "hankelkit/u_function.hpp"

namespace hankelkit::hankel {

struct SearchOptions {
  std::size_t n = 3;
  std::size_t samples = 10'000;
  std::uint64_t seed = 0;
  bool a2_zero = true;
  /// Degree K of the polynomial Schwarz function.
  std::size_t truncation = 6;
  double radius = series::kDefaultMembershipRadius;
  std::size_t circle_samples = series::kDefaultMembershipSamples;
};

struct SearchRecord {
  series::UFunctionSpec spec;
  std::size_t n = 0;
  series::Complex h2_value;
  double modulus = 0.0;
  double membership_margin = 0.0;
  /// Position of the spec in the sample stream.
  std::size_t sample_index = 0;
};

struct SearchOutcome {
  /// Empty when no sample passed the membership check.
  std::optional<SearchRecord> best;
  std::size_t samples = 0;
  std::size_t accepted = 0;
};

class EmptySearch : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// One spec drawn from the necessary coefficient region: c1 uniform in the
/// unit disk, c2..c4 uniform in the disks their bounds allow given the
/// earlier draws, c5..cK uniform in the disk of radius
/// max(0, 1 - sum_{j<k} j |c_j|)/k, a2 uniform in |a2| <= 2 unless a2_zero.
series::UFunctionSpec sample_spec(detail::SeededRng& rng, bool a2_zero,
                                  std::size_t truncation);

/// Draws options.samples specs serially from the seed, then evaluates them
/// in parallel. The best record has the largest modulus, ties going to the
/// lowest sample index.
SearchOutcome conjecture_search(const SearchOptions& options);

/// Throws EmptySearch when no sample is a member.
SearchRecord conjecture_search(std::size_t n, std::size_t samples,
                               std::uint64_t seed, bool a2_zero);

} // namespace hankelkit::hankel

#endif // HANKELKIT_SEARCH_HPP
