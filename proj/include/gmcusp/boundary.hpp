#pragma once

#include <variant>
#include <type_traits>
#include <utility>
#include <vector>

#include "gmcusp/field.hpp"

namespace gmcusp {

struct Periodic {};
/// Zero-gradient extrapolation of the adjacent interior cell.
struct Transmissive {};
/// Mirror image of the interior with the wall-normal velocity negated.
struct ReflectiveWall {};
struct SupersonicInflow {
    PrimitiveState state;
};
struct FixedState {
    PrimitiveState state;
};
/// Straight shock moving along the edge: ghost cells whose center lies at
/// x < foot(t) take the post-shock state, the rest the pre-shock state.
/// foot(t) = foot0 + foot_speed * t (intended for the top/bottom edges).
struct PostShockTimeDependent {
    double foot0 = 0.0;
    double foot_speed = 0.0;
    PrimitiveState pre;
    PrimitiveState post;

    double foot(double t) const noexcept { return foot0 + foot_speed * t; }
};

using EdgeCondition =
    std::variant<Periodic, Transmissive, ReflectiveWall, SupersonicInflow, FixedState, PostShockTimeDependent>;

/// A condition applied from tangential coordinate `begin` onwards (until the
/// next segment's begin).
struct EdgeSegment {
    double begin;
    EdgeCondition condition;
};

/// Piecewise condition along one edge, segments sorted by `begin`.
class Edge {
public:
    Edge() : Edge(Transmissive{}) {}
    Edge(EdgeCondition c);  // NOLINT(google-explicit-constructor)
    template <class C>
        requires std::is_constructible_v<EdgeCondition, C>
    Edge(C c) : Edge(EdgeCondition(std::move(c))) {}  // NOLINT(google-explicit-constructor)
    explicit Edge(std::vector<EdgeSegment> segments);

    const EdgeCondition& at(double tangential) const noexcept;
    const std::vector<EdgeSegment>& segments() const noexcept { return segments_; }
    bool is_periodic() const noexcept;

private:
    std::vector<EdgeSegment> segments_;
};

struct BoundarySpec {
    Edge left;
    Edge right;
    Edge bottom;
    Edge top;

    static BoundarySpec all(const EdgeCondition& c) { return {c, c, c, c}; }

    /// Throws ConfigError when a periodic edge is not paired with its opposite.
    void validate() const;
};

/// Fill the ghost layers of `field` for simulation time `time`. The x-edges
/// are filled over interior rows first, then the y-edges over full padded
/// rows, so ghost corners inherit the y-edge rule.
void apply_boundary_conditions(Field& field, const BoundarySpec& bcs, double time, const GasModel& gas);

}  // namespace gmcusp
