#include "gmcusp/cases.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

#include "gmcusp/midpoint_riemann.hpp"

namespace gmcusp {
namespace {

constexpr double kVortexHalfWidth = 5.0;

// Double Mach reflection geometry: shock foot on the wall and inclination.
constexpr double kDmrFoot = 1.0 / 6.0;
constexpr double kDmrAngleDeg = 60.0;

// Odd-even duct: 800 x 20 square cells of width 1.25, shock starting at x = 10.
constexpr double kOddEvenLength = 1000.0;
constexpr double kOddEvenWidth = 25.0;
constexpr double kOddEvenShockStart = 10.0;

constexpr double kStandingLength = 50.0;
constexpr double kStandingWidth = 25.0;
// Sub-cell shock position: fraction of the way from upstream to downstream
// density in the single intermediate cell.
constexpr double kStandingShockFraction = 0.5;
constexpr int kRelaxSteps = 5000;
constexpr int kNewtonWindow = 48;
constexpr int kNewtonIterations = 30;

PrimitiveState vortex_state(double x, double y, double strength, const GasModel& gas) noexcept {
    const double g = gas.gamma();
    const double r2 = x * x + y * y;
    const double pi = std::numbers::pi;
    const double du = strength / (2.0 * pi) * std::exp(0.5 * (1.0 - r2));
    const double dtemp = -(g - 1.0) / (8.0 * g * pi * pi) * strength * strength * std::exp(1.0 - r2);
    const double temp = 1.0 + dtemp;
    const double rho = std::pow(temp, 1.0 / (g - 1.0));
    return {rho, 1.0 - du * y, 1.0 + du * x, std::pow(rho, g)};
}

// Wrap a coordinate into [lo, lo + length).
double wrap(double x, double lo, double length) noexcept {
    if (x < lo) x += length;
    if (x >= lo + length) x -= length;
    return x;
}

PrimitiveState dmr_pre() noexcept { return {1.4, 0.0, 0.0, 1.0}; }

ShockJump dmr_jump(const CaseSpec& spec, const GasModel& gas) {
    ShockJump jump = moving_shock(dmr_pre(), spec.shock_mach, gas);
    // Rotate the post-shock velocity onto the shock normal (sin 60, -cos 60).
    const double angle = kDmrAngleDeg * std::numbers::pi / 180.0;
    const double speed = jump.downstream.u;
    jump.downstream.u = speed * std::sin(angle);
    jump.downstream.v = -speed * std::cos(angle);
    return jump;
}

PrimitiveState odd_even_pre() noexcept { return {1.4, 0.0, 0.0, 1.0}; }

PrimitiveState standing_upstream(const CaseSpec& spec, const GasModel& gas) noexcept {
    PrimitiveState up{1.0, 0.0, 0.0, 1.0};
    up.u = spec.shock_mach * sound_speed(up, gas);
    return up;
}

}  // namespace

std::string_view case_key(CaseName name) noexcept {
    switch (name) {
        case CaseName::IsentropicVortex: return "vortex";
        case CaseName::RiemannProblem1: return "riemann1";
        case CaseName::RiemannProblem2: return "riemann2";
        case CaseName::DoubleMachReflection: return "dmr";
        case CaseName::OddEvenDecoupling: return "odd_even";
        case CaseName::StandingShock: return "standing_shock";
    }
    return "unknown";
}

std::string_view case_description(CaseName name) noexcept {
    switch (name) {
        case CaseName::IsentropicVortex: return "isentropic vortex advected diagonally, periodic [-5,5]^2";
        case CaseName::RiemannProblem1: return "2D Riemann problem 1 on [-1,1]^2 to t=1.05";
        case CaseName::RiemannProblem2: return "2D Riemann problem 2 on [-1,1]^2 to t=0.5";
        case CaseName::DoubleMachReflection: return "Mach 10 shock at 60 deg reflecting off a wall, [0,4]x[0,1]";
        case CaseName::OddEvenDecoupling: return "Mach 6 shock down an 800x20 duct with odd-even seed, t=140";
        case CaseName::StandingShock: return "Mach 6 standing normal shock on 50x25 cells, 10000 steps";
    }
    return "";
}

std::optional<CaseName> parse_case_name(std::string_view key) noexcept {
    for (CaseName c : all_cases())
        if (case_key(c) == key) return c;
    return std::nullopt;
}

const std::vector<CaseName>& all_cases() {
    static const std::vector<CaseName> cases{CaseName::IsentropicVortex,     CaseName::RiemannProblem1,
                                             CaseName::RiemannProblem2,      CaseName::DoubleMachReflection,
                                             CaseName::OddEvenDecoupling,    CaseName::StandingShock};
    return cases;
}

void CaseSpec::validate() const {
    grid.validate();
    std::ostringstream msg;
    if (!(cfl > 0.0 && cfl <= 1.0))
        msg << "cfl must lie in (0, 1], got " << cfl;
    else if (!(t_final >= 0.0))
        msg << "t_final must be non-negative";
    else if (max_steps && *max_steps < 0)
        msg << "max_steps must be non-negative";
    else if (std::isinf(t_final) && !max_steps)
        msg << "an unbounded run needs max_steps";
    else if (name == CaseName::DoubleMachReflection || is_instability_case()) {
        if (!(shock_mach > 1.0)) msg << "shock Mach number must exceed 1, got " << shock_mach;
    }
    if (!msg.str().empty()) throw ConfigError(std::string(case_key(name)) + ": " + msg.str());
}

CaseSpec default_case(CaseName name) {
    CaseSpec s;
    s.name = name;
    switch (name) {
        case CaseName::IsentropicVortex:
            s.grid = Grid::span(64, 64, -kVortexHalfWidth, kVortexHalfWidth, -kVortexHalfWidth, kVortexHalfWidth);
            s.t_final = 10.0;
            s.cfl = 0.5;
            break;
        case CaseName::RiemannProblem1:
            s.grid = Grid::span(2000, 2000, -1.0, 1.0, -1.0, 1.0);
            s.t_final = 1.05;
            s.cfl = 0.95;
            break;
        case CaseName::RiemannProblem2:
            s.grid = Grid::span(2000, 2000, -1.0, 1.0, -1.0, 1.0);
            s.t_final = 0.5;
            s.cfl = 0.95;
            break;
        case CaseName::DoubleMachReflection:
            s.grid = Grid::span(1920, 480, 0.0, 4.0, 0.0, 1.0);
            s.t_final = 0.2;
            s.cfl = 0.7;
            s.shock_mach = 10.0;
            break;
        case CaseName::OddEvenDecoupling:
            s.grid = Grid::span(800, 20, 0.0, kOddEvenLength, 0.0, kOddEvenWidth);
            s.t_final = 140.0;
            s.cfl = 0.5;
            s.order = Order::First;
            s.shock_mach = 6.0;
            s.perturbation = 1e-3;
            break;
        case CaseName::StandingShock:
            s.grid = Grid::span(50, 25, 0.0, kStandingLength, 0.0, kStandingWidth);
            s.t_final = std::numeric_limits<double>::infinity();
            s.max_steps = 10000;
            s.cfl = 0.5;
            s.order = Order::First;
            s.shock_mach = 6.0;
            s.perturbation = 1e-3;
            break;
    }
    return s;
}

CaseSpec with_resolution(CaseSpec spec, int nx, int ny) {
    const Grid& g = spec.grid;
    spec.grid = Grid::span(nx, ny, g.x0, g.x_hi(), g.y0, g.y_hi(), g.ghost);
    return spec;
}

QuadrantStates riemann_quadrants(CaseName name) {
    switch (name) {
        case CaseName::RiemannProblem1:
            return {{1.5, 0.0, 0.0, 1.5}, {0.5323, 0.0, 1.206, 0.3}, {0.5323, 1.206, 0.0, 0.3},
                    {0.1379, 1.206, 1.206, 0.029}};
        case CaseName::RiemannProblem2:
            return {{0.5313, 0.0, 0.0, 0.4}, {1.0, 0.0, 0.7276, 1.0}, {1.0, 0.7276, 0.0, 1.0},
                    {0.8, 0.0, 0.0, 1.0}};
        default:
            throw ConfigError("not a Riemann-problem case: " + std::string(case_key(name)));
    }
}

ShockJump moving_shock(const PrimitiveState& upstream, double mach, const GasModel& gas) {
    const double g = gas.gamma();
    const double m2 = mach * mach;
    const double a1 = sound_speed(upstream, gas);
    const double density_ratio = (g + 1.0) * m2 / ((g - 1.0) * m2 + 2.0);
    const double pressure_ratio = 1.0 + 2.0 * g / (g + 1.0) * (m2 - 1.0);

    ShockJump jump;
    jump.upstream = upstream;
    jump.shock_speed = upstream.u + mach * a1;
    jump.downstream.rho = upstream.rho * density_ratio;
    jump.downstream.p = upstream.p * pressure_ratio;
    jump.downstream.u = upstream.u + mach * a1 * (1.0 - 1.0 / density_ratio);
    jump.downstream.v = upstream.v;
    return jump;
}

ShockJump standing_shock(const PrimitiveState& upstream, const GasModel& gas) {
    const double mach = upstream.u / sound_speed(upstream, gas);
    const double g = gas.gamma();
    const double m2 = mach * mach;
    const double density_ratio = (g + 1.0) * m2 / ((g - 1.0) * m2 + 2.0);

    ShockJump jump;
    jump.upstream = upstream;
    jump.downstream.rho = upstream.rho * density_ratio;
    jump.downstream.p = upstream.p * (1.0 + 2.0 * g / (g + 1.0) * (m2 - 1.0));
    jump.downstream.u = upstream.u / density_ratio;
    jump.downstream.v = upstream.v;
    return jump;
}

namespace {

// Explicit first-order march of the 1D profile with fixed inflow and outflow
// ghosts; damps the start-up transient before the Newton solve.
std::vector<FluxVector> relax_profile(std::vector<FluxVector> u, const FluxVector& up, const FluxVector& down,
                                      const GasModel& gas) {
    const int nx = static_cast<int>(u.size());
    std::vector<PrimitiveState> prim(nx + 2);
    std::vector<FluxVector> flux(nx + 1);
    prim[0] = conserved_to_primitive(ConservedState::from_vector(up), gas);
    prim[nx + 1] = conserved_to_primitive(ConservedState::from_vector(down), gas);
    for (int step = 0; step < kRelaxSteps; ++step) {
        double max_speed = 0.0;
        for (int i = 0; i <= nx + 1; ++i) {
            if (i > 0 && i <= nx) prim[i] = conserved_to_primitive(ConservedState::from_vector(u[i - 1]), gas);
            max_speed = std::max(max_speed, std::abs(prim[i].u) + sound_speed(prim[i], gas));
        }
        for (int i = 0; i <= nx; ++i) flux[i] = midpoint_flux(prim[i], prim[i + 1], gas, Axis::X);
        const double ratio = 0.5 / max_speed;
        for (int i = 0; i < nx; ++i) u[i] += ratio * (flux[i] - flux[i + 1]);
    }
    return u;
}

// Steady residuals of the cells [first, last) with the density of `first`
// pinned. Unknowns: the window cells, then the outflow ghost when the
// window reaches the end of the domain.
class ProfileSystem {
public:
    ProfileSystem(const std::vector<FluxVector>& cells, int first, int last, double pinned_rho,
                  const FluxVector& up, const FluxVector& down, const GasModel& gas)
        : cells_(cells), first_(first), last_(last), pinned_rho_(pinned_rho), up_(up), down_(down), gas_(gas),
          free_ghost_(last == static_cast<int>(cells.size())) {}

    Eigen::Index unknowns() const { return 4 * (last_ - first_) + (free_ghost_ ? 4 : 0); }
    Eigen::Index equations() const { return 4 * (last_ - first_) + (free_ghost_ ? 0 : 4) + 1; }

    Eigen::VectorXd pack() const {
        Eigen::VectorXd x(unknowns());
        for (int i = first_; i < last_; ++i)
            for (int k = 0; k < 4; ++k) x[4 * (i - first_) + k] = cells_[i][k];
        if (free_ghost_)
            for (int k = 0; k < 4; ++k) x[4 * (last_ - first_) + k] = down_[k];
        return x;
    }

    FluxVector cell(const Eigen::VectorXd& x, int i) const {
        if (i < 0) return up_;
        if (i < first_) return cells_[i];
        if (i < last_ || (free_ghost_ && i == last_)) {
            const Eigen::Index o = 4 * (i - first_);
            return {{x[o], x[o + 1], x[o + 2], x[o + 3]}};
        }
        return down_;
    }

    /// Throws PositivityError when an iterate leaves the admissible set.
    Eigen::VectorXd residual(const Eigen::VectorXd& x) const {
        const int count = last_ - first_ + (free_ghost_ ? 0 : 1);
        std::vector<FluxVector> flux(count + 1);
        for (int f = 0; f <= count; ++f) flux[f] = face_flux(x, first_ + f);
        Eigen::VectorXd r(equations());
        Eigen::Index row = 0;
        for (std::size_t f = 0; f + 1 < flux.size(); ++f)
            for (int k = 0; k < 4; ++k) r[row++] = flux[f][k] - flux[f + 1][k];
        r[row] = x[0] - pinned_rho_;
        return r;
    }

    std::vector<FluxVector> unpack(const Eigen::VectorXd& x, FluxVector& outflow) const {
        std::vector<FluxVector> out = cells_;
        for (int i = first_; i < static_cast<int>(out.size()); ++i) out[i] = cell(x, i);
        outflow = free_ghost_ ? cell(x, last_) : down_;
        return out;
    }

private:
    // Flux through the face between cells i - 1 and i.
    FluxVector face_flux(const Eigen::VectorXd& x, int i) const {
        const auto prim = [&](int k) { return conserved_to_primitive(ConservedState::from_vector(cell(x, k)), gas_); };
        return midpoint_flux(prim(i - 1), prim(i), gas_, Axis::X);
    }

    const std::vector<FluxVector>& cells_;
    int first_;
    int last_;
    double pinned_rho_;
    FluxVector up_;
    FluxVector down_;
    const GasModel& gas_;
    bool free_ghost_;
};

}  // namespace

SteadyShockProfile steady_shock_profile(const ShockJump& jump, int nx, double fraction, const GasModel& gas) {
    if (nx < 4) throw ConfigError("shock profile needs at least 4 cells");
    if (!(fraction > 0.0 && fraction < 1.0)) throw ConfigError("shock fraction must lie in (0, 1)");
    const FluxVector up = primitive_to_conserved(jump.upstream, gas).as_vector();
    const FluxVector down = primitive_to_conserved(jump.downstream, gas).as_vector();

    std::vector<FluxVector> cells(nx);
    for (int i = 0; i < nx; ++i) cells[i] = i < nx / 2 ? up : down;
    cells[nx / 2] = (1.0 - fraction) * up + fraction * down;
    cells = relax_profile(std::move(cells), up, down, gas);

    const auto shock = std::find_if(cells.begin(), cells.end(), [&](const FluxVector& c) { return !(c == up); });
    if (shock == cells.end()) throw ConfigError("shock left the domain while relaxing the profile");
    const int first = static_cast<int>(shock - cells.begin());
    const int last = std::min(nx, first + kNewtonWindow);
    const double pinned_rho = (1.0 - fraction) * up[0] + fraction * down[0];
    const ProfileSystem system(cells, first, last, pinned_rho, up, down, gas);

    const FluxVector inflow = euler_flux(jump.upstream, gas, Axis::X);
    const double scale = std::max({std::abs(inflow[0]), std::abs(inflow[1]), std::abs(inflow[3])});
    Eigen::VectorXd x = system.pack();
    double norm = std::numeric_limits<double>::infinity();
    try {
        for (int it = 0; it < kNewtonIterations; ++it) {
            const Eigen::VectorXd r = system.residual(x);
            norm = r.lpNorm<Eigen::Infinity>();
            if (norm <= 1e-13 * scale) break;
            Eigen::MatrixXd jac(system.equations(), system.unknowns());
            for (Eigen::Index c = 0; c < x.size(); ++c) {
                Eigen::VectorXd xp = x;
                const double h = 1e-7 * std::max(1.0, std::abs(x[c]));
                xp[c] += h;
                jac.col(c) = (system.residual(xp) - r) / h;
            }
            x -= jac.completeOrthogonalDecomposition().solve(r);
        }
    } catch (const PositivityError&) {
        norm = std::numeric_limits<double>::infinity();
    }
    if (!(norm <= 1e-10 * scale)) throw ConfigError("no steady shock profile found for this grid");

    SteadyShockProfile out;
    FluxVector outflow;
    for (const FluxVector& c : system.unpack(x, outflow)) out.cells.push_back(ConservedState::from_vector(c));
    out.outflow = conserved_to_primitive(ConservedState::from_vector(outflow), gas);
    return out;
}

ShockJump instability_shock(const CaseSpec& spec, const GasModel& gas) {
    switch (spec.name) {
        case CaseName::OddEvenDecoupling: return moving_shock(odd_even_pre(), spec.shock_mach, gas);
        case CaseName::StandingShock: return standing_shock(standing_upstream(spec, gas), gas);
        default: throw ConfigError("not an instability case: " + std::string(case_key(spec.name)));
    }
}

ShockProfile shock_profile(const CaseSpec& spec, const GasModel& gas) {
    const ShockJump jump = instability_shock(spec, gas);
    return {jump.upstream.rho, jump.downstream.rho, spec.name == CaseName::OddEvenDecoupling};
}

Field exact_vortex_solution(const CaseSpec& spec, const GasModel& gas, double time) {
    if (spec.name != CaseName::IsentropicVortex) throw ConfigError("exact solution exists only for the vortex");
    const Grid& g = spec.grid;
    const double lx = g.x_hi() - g.x0;
    const double ly = g.y_hi() - g.y0;
    const double sx = std::fmod(time, lx);
    const double sy = std::fmod(time, ly);

    Field f(g, time);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const double x = wrap(g.xc(i) - sx, g.x0, lx);
            const double y = wrap(g.yc(j) - sy, g.y0, ly);
            f.set_primitive(i, j, vortex_state(x, y, spec.vortex_strength, gas), gas);
        }
    }
    return f;
}

CaseSetup init_case(const CaseSpec& spec, const GasModel& gas) {
    spec.validate();
    const Grid& g = spec.grid;
    CaseSetup setup{Field(g), BoundarySpec{}};
    Field& f = setup.field;

    switch (spec.name) {
        case CaseName::IsentropicVortex: {
            f = exact_vortex_solution(spec, gas, 0.0);
            setup.bcs = BoundarySpec::all(Periodic{});
            break;
        }
        case CaseName::RiemannProblem1:
        case CaseName::RiemannProblem2: {
            const QuadrantStates q = riemann_quadrants(spec.name);
            for (int j = 0; j < g.ny; ++j) {
                for (int i = 0; i < g.nx; ++i) {
                    const bool right = g.xc(i) > 0.0;
                    const bool up = g.yc(j) > 0.0;
                    const PrimitiveState& s =
                        right ? (up ? q.upper_right : q.lower_right) : (up ? q.upper_left : q.lower_left);
                    f.set_primitive(i, j, s, gas);
                }
            }
            setup.bcs = BoundarySpec::all(Transmissive{});
            break;
        }
        case CaseName::DoubleMachReflection: {
            const ShockJump jump = dmr_jump(spec, gas);
            const double cot = 1.0 / std::tan(kDmrAngleDeg * std::numbers::pi / 180.0);
            for (int j = 0; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i)
                    f.set_primitive(i, j, g.xc(i) < kDmrFoot + g.yc(j) * cot ? jump.downstream : jump.upstream, gas);

            // The shock foot on the top edge y = y_hi moves with the shock's
            // x-directional trace speed, mach * a / sin(angle).
            PostShockTimeDependent top;
            top.pre = jump.upstream;
            top.post = jump.downstream;
            top.foot0 = kDmrFoot + g.y_hi() * cot;
            top.foot_speed = jump.shock_speed / std::sin(kDmrAngleDeg * std::numbers::pi / 180.0);

            setup.bcs.left = SupersonicInflow{jump.downstream};
            setup.bcs.right = Transmissive{};
            setup.bcs.bottom = Edge({{0.0, FixedState{jump.downstream}}, {kDmrFoot, ReflectiveWall{}}});
            setup.bcs.top = top;
            break;
        }
        case CaseName::OddEvenDecoupling: {
            const ShockJump jump = moving_shock(odd_even_pre(), spec.shock_mach, gas);
            const int mid = g.ny / 2;
            for (int j = 0; j < g.ny; ++j) {
                for (int i = 0; i < g.nx; ++i) {
                    PrimitiveState s = g.xc(i) < kOddEvenShockStart ? jump.downstream : jump.upstream;
                    if (g.xc(i) >= kOddEvenShockStart && (j == mid - 1 || j == mid))
                        s.rho *= 1.0 + (i % 2 == 0 ? spec.perturbation : -spec.perturbation);
                    f.set_primitive(i, j, s, gas);
                }
            }
            setup.bcs.left = Transmissive{};
            setup.bcs.right = Transmissive{};
            setup.bcs.bottom = ReflectiveWall{};
            setup.bcs.top = ReflectiveWall{};
            break;
        }
        case CaseName::StandingShock: {
            const ShockJump jump = standing_shock(standing_upstream(spec, gas), gas);
            const SteadyShockProfile profile = steady_shock_profile(jump, g.nx, kStandingShockFraction, gas);
            for (int j = 0; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i) f(i, j) = profile.cells[i];
            const int ci = g.nx / 2;
            const int cj = g.ny / 2;
            PrimitiveState seeded = f.primitive(ci, cj, gas);
            seeded.rho *= 1.0 + spec.perturbation;
            f.set_primitive(ci, cj, seeded, gas);
            setup.bcs.left = SupersonicInflow{jump.upstream};
            setup.bcs.right = FixedState{profile.outflow};
            setup.bcs.bottom = Periodic{};
            setup.bcs.top = Periodic{};
            break;
        }
    }
    setup.bcs.validate();
    return setup;
}

}  // namespace gmcusp
