#pragma once

#include <stdexcept>

namespace szilard::statmech {

/// Wall at m = 0 or m = N: no interior force-balance root exists.
struct DegenerateConfiguration : std::domain_error {
    using std::domain_error::domain_error;
};

/// Caller asked for a T = 0 evaluation that only exists as a limit.
struct ZeroTemperatureLimit : std::domain_error {
    using std::domain_error::domain_error;
};

/// Boltzmann-sum truncation bound exceeded the requested tolerance.
struct TruncationError : std::runtime_error {
    TruncationError(const char* what, double bound)
        : std::runtime_error(what), bound(bound) {}
    double bound;
};

/// Single-particle level law for one side of the box, as a function of the
/// side length l.
///
/// InfiniteWell: E_n(l) = c n^2 / l^2 with n >= 1.
/// Harmonic:     E_n(l) = (hbar^2/m_b) (n + 1/2) / l^2 with n >= 0, i.e. a
/// trap whose frequency tracks the compressed trap length, omega(l) =
/// hbar/(m_b l^2); at l equal to the trap length this is hbar*omega*(n+1/2).
/// Both variants scale as 1/l^2, so the wall feels a 1/l^3 force either way.
struct SpectrumModel {
    enum class Variant { InfiniteWell, Harmonic };

    Variant variant = Variant::InfiniteWell;
    double scale = 1.0;  // J*m^2 (or dimensionless when l, T are dimensionless)

    static SpectrumModel infinite_well(double c);
    static SpectrumModel harmonic_for_mass(double boson_mass);

    int first_level() const { return variant == Variant::InfiniteWell ? 1 : 0; }
};

struct BoxState {
    int m_left = 0;
    int m_right = 0;
    double wall_position = 0.5;  // fraction of total_length, in (0, 1)
    double temperature = 0.0;    // kelvin
    double total_length = 1.0;
};

double level_energy(const SpectrumModel& model, int n, double l);

struct PartitionFunctionResult {
    double value = 1.0;
    double truncation_bound = 0.0;  // next-term / accumulated-sum ratio
    bool ground_state_only = false; // T = 0 branch
};

// m-fold product of single-particle Boltzmann sums truncated at `cutoff`
// levels. At T = 0 the sum collapses to the ground configuration and the
// result carries ground_state_only (value is the T->0 limit, 0 for m >= 1
// with a positive ground level).
PartitionFunctionResult partition_function(const SpectrumModel& model, int m, double l,
                                           double temperature, int cutoff = 256,
                                           double tolerance = 1e-12);

// Net force on the wall, positive pushing toward the right. Occupations are
// Boltzmann at the state temperature (ground state only at T = 0); the level
// derivative dE/dl is analytic (-2 E_n / l for both variants).
double net_force(const SpectrumModel& model, const BoxState& state);

// Bisection root of net_force in l, relative tolerance 1e-10.
double equilibrium_position(const SpectrumModel& model, int m, int n_total, double total_length,
                            double temperature);

// l_e^m = L / (1 + ((N-m)/m)^(1/3)).
double equilibrium_closed_form(int m, int n_total, double total_length);

// Low-temperature equilibrium reference for the infinite well:
// exp[-(m/k_B T)(E_1(l_e^m) - E_1(L - l_e^m))] for 0 < m < N/2, 1/(N+1) at
// m = N/2, 1 at the endpoints, mirror value above N/2. `scale` is the well
// coefficient c in J*m^2, lengths in meters, T in kelvin.
double f_star_lowT_infinite_well(int n_total, int m, double total_length, double temperature,
                                 double well_scale);

}  // namespace szilard::statmech
