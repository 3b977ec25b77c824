#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace smma {

/// A concrete assignment of occupation numbers to length states, together
/// with the degeneracy parameters that weight it. Small-scale use only.
struct OccupationVector {
    std::vector<std::pair<int, std::int64_t>> states; ///< (length, occupation)
    int omega = 1;
    double alpha = 0.0;

    std::int64_t total_count() const;  ///< N = sum of occupations
    std::int64_t total_length() const; ///< L = sum of length * occupation
};

/// ln of the disorder number:
///   ln N! + sum_i [ n_i * ln(omega^{l_i} l_i^alpha) - ln n_i! ]
/// with exact log-factorials (lgamma), no Stirling approximation.
double log_disorder(const OccupationVector& v);

/// Enumerates every non-negative integer occupation of exactly three length
/// states satisfying sum n_i = total_count and sum l_i n_i = total_length,
/// and returns the one maximizing log_disorder. Ties go to the
/// lexicographically smallest vector. Throws smma::Error when no feasible
/// occupation exists. Enumeration is linear in total_count.
OccupationVector maximize_disorder_bruteforce(const std::array<int, 3>& lengths,
                                              std::int64_t total_count,
                                              std::int64_t total_length,
                                              int omega, double alpha);

} // namespace smma
