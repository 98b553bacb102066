#include "szilard/bec.hpp"

#include <cmath>

#include "szilard/units.hpp"

namespace szilard::bec {

namespace {

void require_positive(double value, const char* what) {
    if (!(value > 0.0)) throw std::domain_error(std::string(what) + " must be positive");
}

constexpr double pi = 3.14159265358979323846;

}  // namespace

BecParams BecParams::with_trap_length(double mass, double length, double temperature,
                                      long long n_particles) {
    require_positive(mass, "BecParams: mass");
    require_positive(length, "BecParams: trap length");
    require_positive(temperature, "BecParams: temperature");
    if (n_particles < 1) throw std::domain_error("BecParams: n_particles must be >= 1");
    BecParams params;
    params.boson_mass = mass;
    params.trap_length = length;
    params.axial_frequency = trap_frequency(length, mass);
    params.temperature = temperature;
    params.n_particles = n_particles;
    return params;
}

BecParams BecParams::with_frequency(double mass, double omega, double temperature,
                                    long long n_particles) {
    require_positive(omega, "BecParams: frequency");
    return with_trap_length(mass, szilard::bec::trap_length(omega, mass), temperature,
                            n_particles);
}

double trap_length(double omega, double boson_mass) {
    require_positive(omega, "trap_length: omega");
    require_positive(boson_mass, "trap_length: mass");
    return std::sqrt(units::hbar / (boson_mass * omega));
}

double trap_frequency(double length, double boson_mass) {
    require_positive(length, "trap_frequency: length");
    require_positive(boson_mass, "trap_frequency: mass");
    return units::hbar / (boson_mass * length * length);
}

double transition_temperature(long long n_particles, double omega) {
    require_positive(omega, "transition_temperature: omega");
    if (n_particles < 2) throw std::domain_error("transition_temperature: require N >= 2");
    auto rhs = [](double x) { return x * std::log(2.0 * x); };
    double lo = 1.0, hi = 1e12;
    double target = static_cast<double>(n_particles);
    if (rhs(lo) > target)
        throw std::domain_error("transition_temperature: N below the x = 1 bracket");
    if (rhs(hi) < target)
        throw std::domain_error("transition_temperature: N above the bracket");
    while ((hi - lo) > 1e-10 * lo) {
        double mid = 0.5 * (lo + hi);
        (rhs(mid) < target ? lo : hi) = mid;
    }
    double x = 0.5 * (lo + hi);
    return x * units::hbar * omega / units::k_boltzmann;
}

double particles_at_transition(double t_c, double omega) {
    require_positive(t_c, "particles_at_transition: T_c");
    require_positive(omega, "particles_at_transition: omega");
    double x = units::k_boltzmann * t_c / (units::hbar * omega);
    if (x * std::log(2.0 * x) <= 0.0 || x < 1.0)
        throw std::domain_error("particles_at_transition: k_B T_c/(hbar omega) below 1");
    return x * std::log(2.0 * x);
}

double de_broglie_wavelength(double boson_mass, double temperature) {
    require_positive(boson_mass, "de_broglie_wavelength: mass");
    require_positive(temperature, "de_broglie_wavelength: temperature");
    return std::sqrt(2.0 * pi * units::hbar * units::hbar /
                     (boson_mass * units::k_boltzmann * temperature));
}

double interparticle_spacing_1d(double trap_length, long long n_particles) {
    require_positive(trap_length, "interparticle_spacing_1d: trap length");
    if (n_particles < 1) throw std::domain_error("interparticle_spacing_1d: require N >= 1");
    return trap_length / static_cast<double>(n_particles);
}

double interparticle_spacing_3d(double density) {
    require_positive(density, "interparticle_spacing_3d: density");
    return std::pow(density, -1.0 / 3.0);
}

FeasibilityReport condensation_feasible(double wavelength, double spacing) {
    require_positive(wavelength, "condensation_feasible: wavelength");
    require_positive(spacing, "condensation_feasible: spacing");
    FeasibilityReport report;
    report.ratio = wavelength / spacing;
    report.feasible = report.ratio >= 1.0;
    return report;
}

NumberFluctuation number_fluctuation(double temperature, double omega, long long n_particles,
                                     double margin_factor) {
    require_positive(temperature, "number_fluctuation: temperature");
    require_positive(omega, "number_fluctuation: omega");
    if (n_particles < 2) throw std::domain_error("number_fluctuation: require N >= 2");
    NumberFluctuation result;
    result.delta_n = pi / std::sqrt(6.0) * units::k_boltzmann * temperature /
                     (units::hbar * omega);
    result.validity_bound = units::hbar * omega / units::k_boltzmann *
                            static_cast<double>(n_particles) /
                            std::log(static_cast<double>(n_particles));
    result.within_validity = temperature <= margin_factor * result.validity_bound;
    return result;
}

double gamma_parameter(double omega, double temperature) {
    require_positive(omega, "gamma_parameter: omega");
    require_positive(temperature, "gamma_parameter: temperature");
    return units::hbar * omega / (units::k_boltzmann * temperature);
}

}  // namespace szilard::bec
