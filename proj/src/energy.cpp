#include "wsn/energy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wsn {

namespace {

// d*d fast paths keep the common exponents exact and cheap.
double pow_gamma(double d, double gamma) {
    if (gamma == 2.0) return d * d;
    if (gamma == 4.0) {
        const double d2 = d * d;
        return d2 * d2;
    }
    return std::pow(d, gamma);
}

}  // namespace

double tx_cost(const RadioParams& radio, double k_bits, double d_meters) {
    const double gamma =
        d_meters < radio.d_threshold ? radio.gamma_near : radio.gamma_far;
    return radio.e_elec * k_bits + radio.e_amp * pow_gamma(d_meters, gamma) * k_bits;
}

double rx_cost(const RadioParams& radio, double k_bits) {
    return radio.e_elec * k_bits;
}

double cpu_cost(const RadioParams& radio, double k_bits) {
    return radio.e_cpu * k_bits;
}

double hop_total_cost(const RadioParams& radio, double k_bits, double d_meters) {
    return tx_cost(radio, k_bits, d_meters) + rx_cost(radio, k_bits) +
           cpu_cost(radio, k_bits);
}

double death_epsilon(const RadioParams& radio) {
    return rx_cost(radio, 1.0);
}

double charge(NodeState& node, double cost, double death_eps) {
    if (node.role == Role::Dead) {
        throw std::logic_error("charge: node " + std::to_string(node.id) +
                               " is already dead");
    }
    const double debit = cost < node.energy ? cost : node.energy;
    node.energy -= debit;
    if (node.energy < death_eps) node.role = Role::Dead;
    return debit;
}

}  // namespace wsn
