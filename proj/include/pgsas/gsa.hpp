#ifndef PGSAS_GSA_HPP
#define PGSAS_GSA_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "pgsas/sut_model.hpp"

namespace pgsas::gsa {

/// Which set of objects exerts force each iteration.
enum class KbestSchedule {
    linear_decay,     // K shrinks linearly from N at t=0 to 1 at t=T
    full_population,  // K = N throughout
};

/// Distance term in the force denominator. `position` is the Euclidean
/// distance between position vectors; `mass_difference` uses the absolute
/// difference of normalized masses instead, kept for comparison runs.
enum class DistanceMode {
    position,
    mass_difference,
};

struct Params {
    int population_size = 200;
    double g0 = 10.0;
    double alpha = 20.0;
    double epsilon = 1e-9;
    int max_iterations = 500;
    KbestSchedule kbest = KbestSchedule::linear_decay;
    DistanceMode distance = DistanceMode::position;

    void validate() const {
        if (population_size < 2) throw std::invalid_argument("population size must be at least 2");
        if (max_iterations < 1) throw std::invalid_argument("iteration count must be at least 1");
        if (!(g0 > 0.0)) throw std::invalid_argument("initial gravitational constant must be positive");
        if (!(alpha >= 0.0)) throw std::invalid_argument("attenuation factor must be non-negative");
        if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    }
};

/// One candidate test case as a point in the continuous search space.
struct Object {
    std::vector<double> position;
    std::vector<double> velocity;
    int fitness = 0;
    double mass = 0.0;  // normalized, in [0,1] after compute_masses
};

struct State {
    SutConfig config;
    std::vector<Object> objects;
    int iteration = 0;
    double g = 0.0;
    int best = 0;   // max fitness in the population
    int worst = 0;  // min fitness in the population
    int resample_count = 0;
};

/// Gravitational constant at iteration t: g0 * exp(-alpha * t / T).
inline double gravitational_constant(int t, const Params& params) {
    return params.g0 * std::exp(-params.alpha * static_cast<double>(t) /
                                static_cast<double>(params.max_iterations));
}

/// Number of force-exerting objects at iteration t.
inline int kbest_size(int t, const Params& params) {
    const int n = params.population_size;
    if (params.kbest == KbestSchedule::full_population) return n;
    const double fraction = 1.0 - static_cast<double>(t) / static_cast<double>(params.max_iterations);
    return std::max(1, static_cast<int>(std::lround(n * fraction)));
}

/// Indices of the k highest-fitness objects, ties broken by lower index.
inline std::vector<int> kbest_indices(const State& state, int k) {
    std::vector<int> order(state.objects.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return state.objects[static_cast<std::size_t>(a)].fitness >
               state.objects[static_cast<std::size_t>(b)].fitness;
    });
    order.resize(static_cast<std::size_t>(std::min<int>(k, static_cast<int>(order.size()))));
    return order;
}

/// Maps a continuous position to a discrete test case: round half away
/// from zero, then clamp into [0, v_d - 1]. Throws std::domain_error on a
/// non-finite coordinate, which signals a kinematics blow-up upstream.
inline TestCase decode_position(std::span<const double> position, const SutConfig& config) {
    TestCase tc;
    tc.values.resize(position.size());
    for (std::size_t d = 0; d < position.size(); ++d) {
        if (!std::isfinite(position[d])) {
            throw std::domain_error("non-finite coordinate in dimension " + std::to_string(d));
        }
        const int hi = config.cardinality(static_cast<int>(d)) - 1;
        const auto rounded = static_cast<long long>(std::llround(position[d]));
        tc.values[d] = static_cast<int>(std::clamp<long long>(rounded, 0, hi));
    }
    return tc;
}

/// Fresh population: positions uniform per dimension over [0, v_d - 1],
/// velocities zero, iteration reset. The caller owns the random stream so
/// one seed drives a whole multi-cycle run.
inline State init_population(const SutConfig& config, const Params& params, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    State state{config, {}, 0, gravitational_constant(0, params), 0, 0, 0};
    const auto p = static_cast<std::size_t>(config.parameter_count());
    state.objects.resize(static_cast<std::size_t>(params.population_size));
    for (auto& object : state.objects) {
        object.position.resize(p);
        object.velocity.assign(p, 0.0);
        for (std::size_t d = 0; d < p; ++d) {
            object.position[d] = u01(rng) * (config.cardinality(static_cast<int>(d)) - 1);
        }
    }
    return state;
}

/// Decodes and scores every object in index order, then records the
/// population extremes (best = max, worst = min).
template <typename FitnessFn>
void evaluate_population(State& state, FitnessFn&& fitness) {
    int best = std::numeric_limits<int>::min();
    int worst = std::numeric_limits<int>::max();
    for (auto& object : state.objects) {
        object.fitness = fitness(decode_position(object.position, state.config));
        best = std::max(best, object.fitness);
        worst = std::min(worst, object.fitness);
    }
    state.best = best;
    state.worst = worst;
}

/// Normalized masses: m_i = (fit_i - worst) / (best - worst), then divided
/// by the population sum. Callers must handle the degenerate best == worst
/// population themselves; reaching here with it is a contract violation.
inline void compute_masses(State& state) {
    if (state.best == state.worst) {
        throw std::logic_error("compute_masses called on a degenerate population");
    }
    const double spread = static_cast<double>(state.best - state.worst);
    double sum = 0.0;
    for (auto& object : state.objects) {
        object.mass = static_cast<double>(object.fitness - state.worst) / spread;
        sum += object.mass;
    }
    for (auto& object : state.objects) {
        object.mass /= sum;
    }
}

/// Total force on each object from the current k-best set, flattened as
/// out[i * p + d]. One rand draw per (receiver, source) pair, receivers in
/// index order, sources in ascending index order within the k-best set.
template <typename RandFn>
void compute_forces(const State& state, const Params& params, RandFn&& rand01,
                    std::vector<double>& out) {
    const auto n = state.objects.size();
    const auto p = static_cast<std::size_t>(state.config.parameter_count());
    out.assign(n * p, 0.0);

    std::vector<char> exerts(n, 0);
    for (const int j : kbest_indices(state, kbest_size(state.iteration, params))) {
        exerts[static_cast<std::size_t>(j)] = 1;
    }

    for (std::size_t i = 0; i < n; ++i) {
        const Object& receiver = state.objects[i];
        double* force = &out[i * p];
        for (std::size_t j = 0; j < n; ++j) {
            if (!exerts[j] || j == i) continue;
            const Object& source = state.objects[j];

            double distance = 0.0;
            if (params.distance == DistanceMode::position) {
                for (std::size_t d = 0; d < p; ++d) {
                    const double delta = source.position[d] - receiver.position[d];
                    distance += delta * delta;
                }
                distance = std::sqrt(distance);
            } else {
                distance = std::abs(source.mass - receiver.mass);
            }

            const double coef = rand01() * state.g * (receiver.mass * source.mass) /
                                (distance + params.epsilon);
            for (std::size_t d = 0; d < p; ++d) {
                force[d] += coef * (source.position[d] - receiver.position[d]);
            }
        }
    }
}

/// Acceleration, velocity and position update. The mass divisor is floored
/// at epsilon since the worst object's normalized mass is exactly zero.
/// Velocity gets one damping draw per (object, dimension); positions are
/// clamped into [0, v_d - 1]. An object that turns non-finite is resampled
/// uniformly with zero velocity and counted in resample_count.
template <typename RandFn>
void update_kinematics(State& state, std::span<const double> forces, const Params& params,
                       RandFn&& rand01) {
    const auto p = static_cast<std::size_t>(state.config.parameter_count());
    for (std::size_t i = 0; i < state.objects.size(); ++i) {
        Object& object = state.objects[i];
        const double inv_mass = 1.0 / std::max(object.mass, params.epsilon);
        bool blown_up = false;
        for (std::size_t d = 0; d < p; ++d) {
            const double hi = static_cast<double>(state.config.cardinality(static_cast<int>(d)) - 1);
            const double acceleration = forces[i * p + d] * inv_mass;
            const double velocity = rand01() * object.velocity[d] + acceleration;
            const double position = object.position[d] + velocity;
            if (!std::isfinite(acceleration) || !std::isfinite(velocity) || !std::isfinite(position)) {
                blown_up = true;
            }
            object.velocity[d] = velocity;
            object.position[d] = std::clamp(position, 0.0, hi);
        }
        if (blown_up) {
            for (std::size_t d = 0; d < p; ++d) {
                const double hi = static_cast<double>(state.config.cardinality(static_cast<int>(d)) - 1);
                object.position[d] = rand01() * hi;
                object.velocity[d] = 0.0;
            }
            ++state.resample_count;
        }
    }
    ++state.iteration;
    state.g = gravitational_constant(state.iteration, params);
}

} // namespace pgsas::gsa

#endif // PGSAS_GSA_HPP
