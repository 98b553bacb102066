#pragma once

#include <stdexcept>

namespace szilard::units {

// CODATA 2018 values, fixed at build time.
inline constexpr double k_boltzmann = 1.380649e-23;        // J/K (exact)
inline constexpr double hbar = 1.054571817e-34;            // J*s
inline constexpr double electron_mass = 9.1093837015e-31;  // kg, m_0
inline constexpr double electron_volt = 1.602176634e-19;   // J (exact)

/// An energy stored canonically in joules, with eV/meV and k_B*T views.
class Energy {
public:
    static Energy from_joules(double j) { return Energy(j); }
    static Energy from_ev(double ev) { return Energy(ev * electron_volt); }
    static Energy from_mev(double mev) { return Energy(mev * 1e-3 * electron_volt); }

    double joules() const { return joules_; }
    double ev() const { return joules_ / electron_volt; }
    double mev() const { return joules_ / (1e-3 * electron_volt); }

    /// Value in units of k_B*T at temperature T (kelvin, T > 0).
    double in_kbt(double temperature) const {
        if (temperature <= 0.0)
            throw std::domain_error("Energy::in_kbt: temperature must be positive");
        return joules_ / (k_boltzmann * temperature);
    }

private:
    explicit Energy(double j) : joules_(j) {}
    double joules_ = 0.0;
};

/// k_B*T for T >= 0 kelvin.
inline Energy thermal_energy(double temperature) {
    if (temperature < 0.0)
        throw std::domain_error("thermal_energy: negative temperature");
    return Energy::from_joules(k_boltzmann * temperature);
}

/// Converts a dimensionless work w (in units of k_B*T) to an Energy at T > 0 kelvin.
inline Energy convert_work(double work_kbt, double temperature) {
    if (temperature <= 0.0)
        throw std::domain_error("convert_work: temperature must be positive");
    return Energy::from_joules(work_kbt * k_boltzmann * temperature);
}

}  // namespace szilard::units
