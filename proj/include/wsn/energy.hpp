#pragma once

#include "wsn/core.hpp"

namespace wsn {

// Transmit cost for k bits over d meters: e_elec*k + e_amp*d^gamma*k, with
// gamma = gamma_near below d_threshold and gamma_far at or above it.
double tx_cost(const RadioParams& radio, double k_bits, double d_meters);

// Receive cost: e_elec*k.
double rx_cost(const RadioParams& radio, double k_bits);

// Processing cost: e_cpu*k.
double cpu_cost(const RadioParams& radio, double k_bits);

// Full single-hop cost, identical to tx + rx + cpu.
double hop_total_cost(const RadioParams& radio, double k_bits, double d_meters);

// A node counts as dead once it cannot pay for one minimal (1-bit) receive.
double death_epsilon(const RadioParams& radio);

// Deducts cost from the node, clamping at zero, and marks it Dead when the
// remainder falls below death_epsilon. Returns the energy actually removed.
// Charging a node that is already Dead is a contract violation and throws.
double charge(NodeState& node, double cost, double death_eps);

}  // namespace wsn
