#include "smma/model.hpp"

#include <cassert>

namespace smma {

namespace {

// Exponentiation by squaring in double; exact while the result fits the
// 53-bit significand, +inf on overflow.
double ipow(double base, int exp) {
    double acc = 1.0;
    double term = base;
    for (int e = exp; e > 0; e >>= 1) {
        if (e & 1) acc *= term;
        if (e > 1) term *= term;
    }
    return acc;
}

} // namespace

double ma_eval_at(const MaParams& p, double length) {
    assert(length >= 1.0);
    return std::exp(std::log(p.amplitude) + p.exponent * std::log(length) -
                    p.decay * length);
}

double smma_eval_at(const SmmaParams& p, double length) {
    assert(length >= 1.0);
    return std::exp(length * std::log(static_cast<double>(p.omega)) + p.phi +
                    p.alpha * std::log(length) - p.theta * length);
}

double ma_eval(const MaParams& p, int length) {
    return ma_eval_at(p, static_cast<double>(length));
}

double smma_eval(const SmmaParams& p, int length) {
    return smma_eval_at(p, static_cast<double>(length));
}

SmmaParams ma_to_smma(const MaParams& p, int omega) {
    SmmaParams out;
    out.phi = std::log(p.amplitude);
    out.alpha = p.exponent;
    out.theta = p.decay + std::log(static_cast<double>(omega));
    out.omega = omega;
    return out;
}

MaParams smma_to_ma(const SmmaParams& p) {
    MaParams out;
    out.amplitude = std::exp(p.phi);
    out.exponent = p.alpha;
    out.decay = p.theta - std::log(static_cast<double>(p.omega));
    return out;
}

double degeneracy(int length, int omega, double alpha) {
    return ipow(static_cast<double>(omega), length) *
           std::pow(static_cast<double>(length), alpha);
}

double log_degeneracy(int length, int omega, double alpha) {
    return length * std::log(static_cast<double>(omega)) +
           alpha * std::log(static_cast<double>(length));
}

} // namespace smma
