#include "wsn/layering.hpp"

#include <algorithm>
#include <cassert>

namespace wsn {

Layering compute_layers(double span_meters, double first_fraction) {
    assert(span_meters > 0.0);
    Layering layering;
    double width = first_fraction * span_meters;
    layering.widths.push_back(width);
    double remaining = span_meters - width;
    while (true) {
        const double next = layering.widths.back() + first_fraction * remaining;
        if (remaining >= next) {
            layering.widths.push_back(next);
            remaining -= next;
        } else {
            // Too little left for another band: the last one absorbs it, so
            // the widths keep summing to the span exactly.
            layering.widths.back() += remaining;
            break;
        }
    }
    return layering;
}

double field_near_distance(const Position& sink, double field_w, double field_h) {
    const double cx = std::clamp(sink.x, 0.0, field_w);
    const double cy = std::clamp(sink.y, 0.0, field_h);
    return distance(sink, Position{cx, cy});
}

void assign_layers(std::vector<NodeState>& nodes, const Layering& layering,
                   const Position& sink, const NetworkConfig& config) {
    const double near_edge =
        field_near_distance(sink, config.field_width, config.field_height);
    for (NodeState& node : nodes) {
        if (!node.alive()) continue;
        const double offset = distance(node.pos, sink) - near_edge;
        node.layer = layering.band_of(std::max(offset, 0.0));
    }
}

Layering relayer_on_sink_move(std::vector<NodeState>& nodes, const Position& sink,
                              const NetworkConfig& config) {
    const double near_edge =
        field_near_distance(sink, config.field_width, config.field_height);
    double span = 0.0;
    for (const NodeState& node : nodes) {
        if (!node.alive()) continue;
        span = std::max(span, distance(node.pos, sink) - near_edge);
    }
    // All nodes at the near edge (or a single node on top of the sink)
    // degenerate to one band covering everything.
    if (span <= 0.0) span = 1.0;
    Layering layering = compute_layers(span, config.layer_fraction);
    assign_layers(nodes, layering, sink, config);
    return layering;
}

}  // namespace wsn
