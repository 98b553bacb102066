#include "szilard/statmech.hpp"

#include <cmath>
#include <limits>

#include "szilard/units.hpp"

namespace szilard::statmech {

SpectrumModel SpectrumModel::infinite_well(double c) {
    if (c <= 0.0) throw std::domain_error("SpectrumModel: scale must be positive");
    return SpectrumModel{Variant::InfiniteWell, c};
}

SpectrumModel SpectrumModel::harmonic_for_mass(double boson_mass) {
    if (boson_mass <= 0.0) throw std::domain_error("SpectrumModel: mass must be positive");
    return SpectrumModel{Variant::Harmonic, units::hbar * units::hbar / boson_mass};
}

double level_energy(const SpectrumModel& model, int n, double l) {
    if (l <= 0.0) throw std::domain_error("level_energy: length must be positive");
    if (n < model.first_level()) throw std::domain_error("level_energy: level index out of range");
    if (model.variant == SpectrumModel::Variant::InfiniteWell)
        return model.scale * static_cast<double>(n) * n / (l * l);
    return model.scale * (n + 0.5) / (l * l);
}

namespace {

// Mean single-particle energy over a truncated Boltzmann distribution.
double mean_energy(const SpectrumModel& model, double l, double temperature, int cutoff) {
    int n0 = model.first_level();
    if (temperature == 0.0) return level_energy(model, n0, l);
    double kt = units::k_boltzmann * temperature;
    double e0 = level_energy(model, n0, l);
    double z = 0.0, ez = 0.0;
    for (int n = n0; n < n0 + cutoff; ++n) {
        double e = level_energy(model, n, l);
        double w = std::exp(-(e - e0) / kt);
        z += w;
        ez += e * w;
        if (w < 1e-18) break;
    }
    return ez / z;
}

}  // namespace

PartitionFunctionResult partition_function(const SpectrumModel& model, int m, double l,
                                           double temperature, int cutoff, double tolerance) {
    if (m < 0) throw std::domain_error("partition_function: m must be non-negative");
    if (temperature < 0.0) throw std::domain_error("partition_function: negative temperature");
    if (cutoff < 1) throw std::domain_error("partition_function: cutoff must be >= 1");
    if (l <= 0.0) throw std::domain_error("partition_function: length must be positive");

    PartitionFunctionResult result;
    if (m == 0) return result;  // empty product

    int n0 = model.first_level();
    if (temperature == 0.0) {
        // Ground configuration only: Z collapses to exp(-m E_ground / k_B T),
        // whose T->0 limit is 0 for a positive ground level.
        result.ground_state_only = true;
        result.value = level_energy(model, n0, l) > 0.0 ? 0.0 : 1.0;
        return result;
    }

    double kt = units::k_boltzmann * temperature;
    double z1 = 0.0;
    for (int n = n0; n < n0 + cutoff; ++n)
        z1 += std::exp(-level_energy(model, n, l) / kt);
    double next = std::exp(-level_energy(model, n0 + cutoff, l) / kt);
    result.truncation_bound = next / z1;
    if (result.truncation_bound > tolerance)
        throw TruncationError("partition_function: truncation bound above tolerance",
                              result.truncation_bound);
    result.value = std::pow(z1, m);
    return result;
}

double net_force(const SpectrumModel& model, const BoxState& state) {
    if (!(state.wall_position > 0.0 && state.wall_position < 1.0))
        throw std::domain_error("net_force: wall position must lie in (0, 1)");
    double l_left = state.wall_position * state.total_length;
    double l_right = state.total_length - l_left;
    // dE/dl = -2 E / l for both variants, so each particle pushes with 2<E>/l.
    double left = state.m_left > 0
                      ? 2.0 * state.m_left * mean_energy(model, l_left, state.temperature, 256) / l_left
                      : 0.0;
    double right = state.m_right > 0
                       ? 2.0 * state.m_right * mean_energy(model, l_right, state.temperature, 256) / l_right
                       : 0.0;
    return left - right;
}

double equilibrium_position(const SpectrumModel& model, int m, int n_total, double total_length,
                            double temperature) {
    if (total_length <= 0.0) throw std::domain_error("equilibrium_position: length must be positive");
    if (m <= 0 || m >= n_total)
        throw DegenerateConfiguration("equilibrium_position: wall runs to the box edge");

    BoxState state;
    state.m_left = m;
    state.m_right = n_total - m;
    state.temperature = temperature;
    state.total_length = total_length;

    auto force_at = [&](double frac) {
        state.wall_position = frac;
        return net_force(model, state);
    };

    // Force diverges +inf as l -> 0 and -inf as l -> L; bracket inside.
    double lo = 1e-9, hi = 1.0 - 1e-9;
    double flo = force_at(lo);
    double fhi = force_at(hi);
    if (!(flo > 0.0 && fhi < 0.0))
        throw std::runtime_error("equilibrium_position: bracket failed");
    while ((hi - lo) > 1e-10 * std::max(lo, 1e-300)) {
        double mid = 0.5 * (lo + hi);
        double fmid = force_at(mid);
        if (fmid > 0.0) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
        if (hi - lo < 1e-15) break;
    }
    return 0.5 * (lo + hi) * total_length;
}

double equilibrium_closed_form(int m, int n_total, double total_length) {
    if (m <= 0 || m >= n_total)
        throw DegenerateConfiguration("equilibrium_closed_form: wall runs to the box edge");
    double ratio = static_cast<double>(n_total - m) / m;
    return total_length / (1.0 + std::cbrt(ratio));
}

double f_star_lowT_infinite_well(int n_total, int m, double total_length, double temperature,
                                 double well_scale) {
    if (m < 0 || m > n_total)
        throw std::domain_error("f_star_lowT_infinite_well: require 0 <= m <= N");
    if (temperature < 0.0)
        throw std::domain_error("f_star_lowT_infinite_well: negative temperature");
    if (temperature == 0.0)
        throw ZeroTemperatureLimit("f_star_lowT_infinite_well: T = 0 exists only as a limit");

    if (m == 0 || m == n_total) return 1.0;
    int m_low = std::min(m, n_total - m);
    if (2 * m_low == n_total) return 1.0 / (n_total + 1.0);

    auto model = SpectrumModel::infinite_well(well_scale);
    double l_eq = equilibrium_closed_form(m_low, n_total, total_length);
    double e_near = level_energy(model, 1, l_eq);
    double e_far = level_energy(model, 1, total_length - l_eq);
    double kt = units::k_boltzmann * temperature;
    return std::exp(-(m_low / kt) * (e_near - e_far));
}

}  // namespace szilard::statmech
