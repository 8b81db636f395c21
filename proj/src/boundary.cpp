#include "gmcusp/boundary.hpp"

#include <algorithm>
#include <limits>
#include <type_traits>

namespace gmcusp {

Edge::Edge(EdgeCondition c) : segments_{{-std::numeric_limits<double>::infinity(), std::move(c)}} {}

Edge::Edge(std::vector<EdgeSegment> segments) : segments_(std::move(segments)) {
    if (segments_.empty()) throw ConfigError("edge needs at least one segment");
    std::stable_sort(segments_.begin(), segments_.end(),
                     [](const EdgeSegment& a, const EdgeSegment& b) { return a.begin < b.begin; });
    segments_.front().begin = -std::numeric_limits<double>::infinity();
}

const EdgeCondition& Edge::at(double tangential) const noexcept {
    const EdgeCondition* c = &segments_.front().condition;
    for (const auto& s : segments_) {
        if (tangential >= s.begin) c = &s.condition;
    }
    return *c;
}

bool Edge::is_periodic() const noexcept {
    return std::any_of(segments_.begin(), segments_.end(),
                       [](const EdgeSegment& s) { return std::holds_alternative<Periodic>(s.condition); });
}

void BoundarySpec::validate() const {
    auto fully_periodic = [](const Edge& e) {
        return e.segments().size() == 1 && std::holds_alternative<Periodic>(e.segments().front().condition);
    };
    for (const Edge* e : {&left, &right, &bottom, &top}) {
        if (e->is_periodic() && !fully_periodic(*e))
            throw ConfigError("periodic condition cannot be mixed with other segments on one edge");
    }
    if (fully_periodic(left) != fully_periodic(right))
        throw ConfigError("periodic left/right edges must come in pairs");
    if (fully_periodic(bottom) != fully_periodic(top))
        throw ConfigError("periodic bottom/top edges must come in pairs");
}

namespace {

// Describes one edge in index space: ghost layer k (0 = adjacent to the
// interior) of line `t` maps to cell ghost(k, t); interior(k, t) is the
// k-th interior cell counted from the edge, periodic(k, t) the wrap image.
template <class GhostAt, class InteriorAt, class WrapAt>
void fill_edge(Field& field, const Edge& edge, double time, const GasModel& gas, int t_begin, int t_end,
               bool normal_is_x, double (Grid::*coord)(int) const noexcept, GhostAt ghost_at, InteriorAt interior_at,
               WrapAt wrap_at) {
    const Grid& g = field.grid();
    for (int t = t_begin; t < t_end; ++t) {
        const double tangential = (g.*coord)(t);
        const EdgeCondition& cond = edge.at(tangential);
        for (int k = 0; k < g.ghost; ++k) {
            ConservedState& dst = ghost_at(k, t);
            std::visit(
                [&](const auto& c) {
                    using C = std::decay_t<decltype(c)>;
                    if constexpr (std::is_same_v<C, Periodic>) {
                        dst = wrap_at(k, t);
                    } else if constexpr (std::is_same_v<C, Transmissive>) {
                        dst = interior_at(0, t);
                    } else if constexpr (std::is_same_v<C, ReflectiveWall>) {
                        dst = interior_at(k, t);
                        if (normal_is_x)
                            dst.mx = -dst.mx;
                        else
                            dst.my = -dst.my;
                    } else if constexpr (std::is_same_v<C, SupersonicInflow> || std::is_same_v<C, FixedState>) {
                        dst = primitive_to_conserved(c.state, gas);
                    } else if constexpr (std::is_same_v<C, PostShockTimeDependent>) {
                        dst = primitive_to_conserved(tangential < c.foot(time) ? c.post : c.pre, gas);
                    }
                },
                cond);
        }
    }
}

}  // namespace

void apply_boundary_conditions(Field& field, const BoundarySpec& bcs, double time, const GasModel& gas) {
    const Grid& g = field.grid();
    const int nx = g.nx;
    const int ny = g.ny;

    fill_edge(
        field, bcs.left, time, gas, 0, ny, true, &Grid::yc,
        [&](int k, int j) -> ConservedState& { return field(-1 - k, j); },
        [&](int k, int j) { return field(k, j); }, [&](int k, int j) { return field(nx - 1 - k, j); });
    fill_edge(
        field, bcs.right, time, gas, 0, ny, true, &Grid::yc,
        [&](int k, int j) -> ConservedState& { return field(nx + k, j); },
        [&](int k, int j) { return field(nx - 1 - k, j); }, [&](int k, int j) { return field(k, j); });
    fill_edge(
        field, bcs.bottom, time, gas, -g.ghost, nx + g.ghost, false, &Grid::xc,
        [&](int k, int i) -> ConservedState& { return field(i, -1 - k); },
        [&](int k, int i) { return field(i, k); }, [&](int k, int i) { return field(i, ny - 1 - k); });
    fill_edge(
        field, bcs.top, time, gas, -g.ghost, nx + g.ghost, false, &Grid::xc,
        [&](int k, int i) -> ConservedState& { return field(i, ny + k); },
        [&](int k, int i) { return field(i, ny - 1 - k); }, [&](int k, int i) { return field(i, k); });
}

}  // namespace gmcusp
