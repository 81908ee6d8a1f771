#include <doctest.h>

#include <stdexcept>

#include "wsn/core.hpp"
#include "wsn/energy.hpp"
#include "wsn/rng.hpp"

using namespace wsn;

namespace {

RadioParams table_params() {
    RadioParams radio;
    radio.e_elec = 50e-9;
    radio.e_amp = 0.659e-9;
    radio.e_cpu = 7e-9;
    radio.packet_bits = 4000.0;
    return radio;
}

}  // namespace

TEST_CASE("tx cost hand-evaluated points") {
    const RadioParams radio = table_params();
    // Amplifier term vanishes at zero distance.
    CHECK(tx_cost(radio, 4000.0, 0.0) == doctest::Approx(2.0e-4).epsilon(1e-12));
    // 50e-9*4000 + 0.659e-9*2500*4000
    CHECK(tx_cost(radio, 4000.0, 50.0) == doctest::Approx(6.79e-3).epsilon(1e-12));
    // Unit inputs reduce to the two coefficients.
    CHECK(tx_cost(radio, 1.0, 1.0) ==
          doctest::Approx(radio.e_elec + radio.e_amp).epsilon(1e-12));
}

TEST_CASE("rx and cpu costs") {
    const RadioParams radio = table_params();
    CHECK(rx_cost(radio, 4000.0) == doctest::Approx(2.0e-4).epsilon(1e-12));
    CHECK(rx_cost(radio, 1.0) == doctest::Approx(5.0e-8).epsilon(1e-12));
    CHECK(cpu_cost(radio, 4000.0) == doctest::Approx(2.8e-5).epsilon(1e-12));
    CHECK(cpu_cost(radio, 1.0) == doctest::Approx(7e-9).epsilon(1e-12));
    CHECK(cpu_cost(radio, 2000.0) == doctest::Approx(2.0 * cpu_cost(radio, 1000.0)));
    // Receiving k bits costs the same as transmitting them zero meters.
    CHECK(rx_cost(radio, 4000.0) == tx_cost(radio, 4000.0, 0.0));
}

TEST_CASE("hop total equals tx+rx+cpu") {
    const RadioParams radio = table_params();
    CHECK(hop_total_cost(radio, 4000.0, 0.0) == doctest::Approx(4.28e-4).epsilon(1e-12));
    CHECK(hop_total_cost(radio, 4000.0, 50.0) ==
          doctest::Approx(7.018e-3).epsilon(1e-12));

    SplitMix64 rng(99);
    for (int i = 0; i < 1000; ++i) {
        const double k = rng.next_double(1.0, 10000.0);
        const double d = rng.next_double(0.0, 400.0);
        CHECK(hop_total_cost(radio, k, d) ==
              doctest::Approx(tx_cost(radio, k, d) + rx_cost(radio, k) +
                              cpu_cost(radio, k))
                  .epsilon(1e-15));
    }
}

TEST_CASE("gamma switches at the distance threshold") {
    RadioParams radio = table_params();
    radio.gamma_near = 2.0;
    radio.gamma_far = 4.0;
    radio.d_threshold = 87.0;
    const double below = tx_cost(radio, 1000.0, 86.9);
    const double at = tx_cost(radio, 1000.0, 87.0);
    CHECK(below == doctest::Approx(radio.e_elec * 1000 +
                                   radio.e_amp * 86.9 * 86.9 * 1000));
    CHECK(at == doctest::Approx(radio.e_elec * 1000 +
                                radio.e_amp * 87.0 * 87.0 * 87.0 * 87.0 * 1000));

    // Non-decreasing in distance for thresholds of at least a meter.
    SplitMix64 rng(7);
    for (int i = 0; i < 500; ++i) {
        RadioParams r2 = table_params();
        r2.gamma_near = 2.0;
        r2.gamma_far = rng.next_double() < 0.5 ? 2.0 : 4.0;
        r2.d_threshold = rng.next_double(1.0, 300.0);
        const double d1 = rng.next_double(0.0, 400.0);
        const double d2 = rng.next_double(0.0, 400.0);
        const double lo = std::min(d1, d2);
        const double hi = std::max(d1, d2);
        CHECK(tx_cost(r2, 4000.0, lo) <= tx_cost(r2, 4000.0, hi));
        CHECK(tx_cost(r2, 4000.0, hi) >= rx_cost(r2, 4000.0));
    }
}

TEST_CASE("charge subtracts, clamps, and kills") {
    const RadioParams radio = table_params();
    const double eps = death_epsilon(radio);
    CHECK(eps == doctest::Approx(50e-9));

    NodeState node;
    node.energy = 0.5;
    node.initial_energy = 0.5;
    CHECK(charge(node, 0.1, eps) == doctest::Approx(0.1));
    CHECK(node.energy == doctest::Approx(0.4));
    CHECK(node.role != Role::Dead);

    NodeState weak;
    weak.energy = 1e-9;
    weak.initial_energy = 0.5;
    const double debit = charge(weak, 1e-3, eps);
    CHECK(debit == doctest::Approx(1e-9));
    CHECK(weak.energy == 0.0);
    CHECK(weak.role == Role::Dead);

    CHECK_THROWS_AS(charge(weak, 0.1, eps), std::logic_error);
}

TEST_CASE("charge marks death below the epsilon even with energy left") {
    const RadioParams radio = table_params();
    const double eps = death_epsilon(radio);
    NodeState node;
    node.energy = 6e-8;
    node.initial_energy = 0.5;
    charge(node, 2e-8, eps);  // leaves 4e-8 < eps
    CHECK(node.role == Role::Dead);
    CHECK(node.energy > 0.0);
    CHECK(node.energy < eps);
}
