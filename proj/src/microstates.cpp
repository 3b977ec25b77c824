#include "smma/microstates.hpp"

#include <cmath>
#include <string>

#include "smma/errors.hpp"
#include "smma/model.hpp"

namespace smma {

std::int64_t OccupationVector::total_count() const {
    std::int64_t n = 0;
    for (const auto& [length, occ] : states) n += occ;
    return n;
}

std::int64_t OccupationVector::total_length() const {
    std::int64_t l = 0;
    for (const auto& [length, occ] : states) l += length * occ;
    return l;
}

double log_disorder(const OccupationVector& v) {
    const auto n_total = v.total_count();
    double sum = std::lgamma(static_cast<double>(n_total) + 1.0);
    for (const auto& [length, occ] : v.states) {
        sum += static_cast<double>(occ) * log_degeneracy(length, v.omega, v.alpha);
        sum -= std::lgamma(static_cast<double>(occ) + 1.0);
    }
    return sum;
}

OccupationVector maximize_disorder_bruteforce(const std::array<int, 3>& lengths,
                                              std::int64_t total_count,
                                              std::int64_t total_length,
                                              int omega, double alpha) {
    const std::int64_t l1 = lengths[0], l2 = lengths[1], l3 = lengths[2];
    if (l1 == l2 || l2 == l3 || l1 == l3)
        throw Error("maximize_disorder_bruteforce: length states must be distinct");

    // With n1 fixed, the two constraints pin n2 and n3:
    //   n2 + n3 = N - n1,  l2 n2 + l3 n3 = L - l1 n1
    bool found = false;
    OccupationVector best;
    double best_value = 0.0;
    for (std::int64_t n1 = 0; n1 <= total_count; ++n1) {
        const std::int64_t rem_count = total_count - n1;
        const std::int64_t rem_length = total_length - l1 * n1;
        const std::int64_t numerator = rem_length - l2 * rem_count;
        const std::int64_t denominator = l3 - l2;
        if (numerator % denominator != 0) continue;
        const std::int64_t n3 = numerator / denominator;
        const std::int64_t n2 = rem_count - n3;
        if (n2 < 0 || n3 < 0) continue;

        OccupationVector candidate;
        candidate.states = {{static_cast<int>(l1), n1},
                            {static_cast<int>(l2), n2},
                            {static_cast<int>(l3), n3}};
        candidate.omega = omega;
        candidate.alpha = alpha;
        const double value = log_disorder(candidate);
        // strict improvement only: earlier (lexicographically smaller) vectors
        // win ties
        if (!found || value > best_value + 1e-9) {
            best = std::move(candidate);
            best_value = value;
            found = true;
        }
    }
    if (!found)
        throw Error("no feasible occupation for N=" + std::to_string(total_count) +
                    ", L=" + std::to_string(total_length));
    return best;
}

} // namespace smma
