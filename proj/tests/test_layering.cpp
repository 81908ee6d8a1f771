#include <doctest.h>

#include <vector>

#include "wsn/core.hpp"
#include "wsn/layering.hpp"
#include "wsn/rng.hpp"

using namespace wsn;

namespace {

// Independent reference: direct iteration of the band recursion, kept apart
// from the implementation under test.
std::vector<double> reference_bands(double span, double fraction) {
    std::vector<double> widths{fraction * span};
    double remaining = span - widths.back();
    while (remaining >= widths.back() + fraction * remaining) {
        widths.push_back(widths.back() + fraction * remaining);
        remaining -= widths.back();
    }
    widths.back() += remaining;
    return widths;
}

}  // namespace

TEST_CASE("band widths for a 200 m span") {
    const Layering layering = compute_layers(200.0);
    REQUIRE(layering.count() == 3);
    CHECK(layering.widths[0] == doctest::Approx(30.0));
    CHECK(layering.widths[1] == doctest::Approx(55.5));
    CHECK(layering.widths[2] == doctest::Approx(114.5));
    CHECK(layering.span() == doctest::Approx(200.0).epsilon(1e-12));
}

TEST_CASE("band widths match the reference iteration") {
    SplitMix64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const double span = rng.next_double(1.0, 2000.0);
        const double fraction = rng.next_double(0.05, 0.4);
        const Layering layering = compute_layers(span, fraction);
        const auto expected = reference_bands(span, fraction);
        REQUIRE(layering.widths.size() == expected.size());
        for (std::size_t b = 0; b < expected.size(); ++b) {
            CHECK(layering.widths[b] == doctest::Approx(expected[b]).epsilon(1e-12));
        }
        double sum = 0.0;
        for (double w : layering.widths) {
            CHECK(w > 0.0);
            sum += w;
        }
        CHECK(sum == doctest::Approx(span).epsilon(1e-12));
    }
}

TEST_CASE("band lookup puts boundaries in the nearer band") {
    Layering layering;
    layering.widths = {30.0, 55.5, 114.5};
    CHECK(layering.band_of(0.0) == 1);
    CHECK(layering.band_of(10.0) == 1);
    CHECK(layering.band_of(30.0) == 1);
    CHECK(layering.band_of(30.0000001) == 2);
    CHECK(layering.band_of(85.5) == 2);
    CHECK(layering.band_of(200.0) == 3);
    CHECK(layering.band_of(200.1) == 3);  // float residue clamps to the last band
}

TEST_CASE("field near distance") {
    CHECK(field_near_distance({100, 300}, 200, 200) == doctest::Approx(100.0));
    CHECK(field_near_distance({100, 100}, 200, 200) == 0.0);
    CHECK(field_near_distance({-30, 100}, 200, 200) == doctest::Approx(30.0));
    CHECK(field_near_distance({250, 250}, 200, 200) ==
          doctest::Approx(distance({250, 250}, {200, 200})));
}

namespace {

std::vector<NodeState> grid_nodes(const NetworkConfig& cfg, int count) {
    std::vector<NodeState> nodes;
    for (int i = 0; i < count; ++i) {
        NodeState n;
        n.id = i;
        n.pos = {cfg.field_width * (0.5 + i) / count, cfg.field_height / 2.0};
        n.energy = 0.5;
        n.initial_energy = 0.5;
        nodes.push_back(n);
    }
    return nodes;
}

}  // namespace

TEST_CASE("layer assignment partitions the alive nodes") {
    NetworkConfig cfg;
    cfg.field_width = 200;
    cfg.field_height = 200;
    auto nodes = grid_nodes(cfg, 40);
    nodes[7].role = Role::Dead;
    const Position sink{100, 300};
    const Layering layering = relayer_on_sink_move(nodes, sink, cfg);

    int assigned = 0;
    for (const auto& n : nodes) {
        if (!n.alive()) continue;
        ++assigned;
        CHECK(n.layer >= 1);
        CHECK(n.layer <= layering.count());
    }
    CHECK(assigned == 39);
}

TEST_CASE("node near the field edge facing the sink lands in band one") {
    NetworkConfig cfg;
    cfg.field_width = 200;
    cfg.field_height = 200;
    std::vector<NodeState> nodes(2);
    nodes[0].id = 0;
    nodes[0].pos = {100, 195};  // 105 m from the sink, 5 m past the near edge
    nodes[1].id = 1;
    nodes[1].pos = {100, 5};
    for (auto& n : nodes) {
        n.energy = 0.5;
        n.initial_energy = 0.5;
    }
    const Layering layering = relayer_on_sink_move(nodes, {100, 300}, cfg);
    CHECK(nodes[0].layer == 1);
    CHECK(nodes[1].layer == layering.count());
}

TEST_CASE("re-layering is deterministic and energy-preserving") {
    NetworkConfig cfg;
    auto nodes = grid_nodes(cfg, 25);
    const Position first_sink{100, 300};
    const Position second_sink{260, 100};

    relayer_on_sink_move(nodes, first_sink, cfg);
    std::vector<int> layers_before;
    for (const auto& n : nodes) layers_before.push_back(n.layer);

    relayer_on_sink_move(nodes, second_sink, cfg);
    relayer_on_sink_move(nodes, first_sink, cfg);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        CHECK(nodes[i].layer == layers_before[i]);
        CHECK(nodes[i].energy == 0.5);
    }
}
