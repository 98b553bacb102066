#pragma once

#include <stdexcept>

namespace szilard::bec {

/// Trapped 1-D boson gas parameters. Either trap_length or axial_frequency
/// may be supplied; the other follows from L_t = sqrt(hbar/(m_b omega)).
struct BecParams {
    double boson_mass = 0.0;       // kg
    double trap_length = 0.0;      // m
    double axial_frequency = 0.0;  // rad/s
    double temperature = 0.0;      // K
    long long n_particles = 0;

    static BecParams with_trap_length(double mass, double length, double temperature,
                                      long long n_particles);
    static BecParams with_frequency(double mass, double omega, double temperature,
                                    long long n_particles);
};

// L_t = sqrt(hbar/(m_b omega)) and its inverse omega = hbar/(m_b L_t^2).
double trap_length(double omega, double boson_mass);
double trap_frequency(double length, double boson_mass);

// Solves N = x ln(2x), x = k_B T_c/(hbar omega), by bisection on
// x in [1, 1e12] (relative tolerance 1e-10) and returns T_c in kelvin.
double transition_temperature(long long n_particles, double omega);

// Right-hand side of the same relation: x ln(2x) with x = k_B T_c/(hbar omega).
double particles_at_transition(double t_c, double omega);

// lambda_db = sqrt(2 pi hbar^2 / (m_b k_B T)).
double de_broglie_wavelength(double boson_mass, double temperature);

// 1-D spacing L_t/N.
double interparticle_spacing_1d(double trap_length, long long n_particles);
// 3-D spacing rho^(-1/3) for a number density rho in m^-3.
double interparticle_spacing_3d(double density);

struct FeasibilityReport {
    double ratio = 0.0;  // lambda / spacing
    bool feasible = false;
};
FeasibilityReport condensation_feasible(double wavelength, double spacing);

struct NumberFluctuation {
    double delta_n = 0.0;
    bool within_validity = false;  // T against (hbar omega/k_B) N/ln N with a margin
    double validity_bound = 0.0;   // kelvin
};
// delta_N = (pi/sqrt(6)) k_B T/(hbar omega), valid well below
// (hbar omega/k_B) N / ln N; margin_factor scales that bound.
NumberFluctuation number_fluctuation(double temperature, double omega, long long n_particles,
                                     double margin_factor = 0.1);

// gamma = hbar omega / (k_B T), the confinement parameter fed to the engine.
double gamma_parameter(double omega, double temperature);

}  // namespace szilard::bec
