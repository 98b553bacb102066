#include "szilard/oracle.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace szilard::oracle {

namespace {

void check_capacity(int n, const char* who) {
    if (n < 1 || n > max_enumeration_n)
        throw combinatorics::CapacityError(std::string(who) + ": n outside 1.." +
                                           std::to_string(max_enumeration_n));
}

}  // namespace

MicrostateSet enumerate_distinguishable(int n) {
    check_capacity(n, "enumerate_distinguishable");
    MicrostateSet set;
    set.n_particles = n;
    set.histogram.assign(n + 1, 0);
    std::uint32_t count = 1u << n;
    set.states.reserve(count);
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        set.states.push_back(mask);
        set.histogram[std::popcount(mask)] += 1;
    }
    return set;
}

MicrostateSet enumerate_indistinguishable_particles(int n) {
    if (n < 1) throw std::domain_error("enumerate_indistinguishable_particles: require n >= 1");
    MicrostateSet set;
    set.n_particles = n;
    set.histogram.assign(n + 1, 1);
    for (int m = 0; m <= n; ++m) set.states.push_back(static_cast<std::uint32_t>(m));
    return set;
}

std::vector<std::int64_t> SideClassSet::class_count_histogram() const {
    std::vector<std::int64_t> histogram(n_particles / 2 + 1, 0);
    for (const auto& cls : classes) histogram[cls.m_low] += 1;
    return histogram;
}

double SideClassSet::class_probability(int m_low) const {
    std::int64_t microstates = 0;
    for (const auto& cls : classes)
        if (cls.m_low == m_low) microstates += cls.size;
    return static_cast<double>(microstates) / std::ldexp(1.0, n_particles);
}

SideClassSet enumerate_indistinguishable_sides(int n) {
    check_capacity(n, "enumerate_indistinguishable_sides");
    SideClassSet set;
    set.n_particles = n;
    std::uint32_t count = 1u << n;
    std::uint32_t full = count - 1;
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        std::uint32_t mirror = full & ~mask;
        if (mask > mirror) continue;  // mirror already emitted this class
        SideClass cls;
        cls.representative = mask;
        cls.size = mask == mirror ? 1 : 2;
        int m = std::popcount(mask);
        cls.m_low = std::min(m, n - m);
        set.classes.push_back(cls);
    }
    return set;
}

std::int64_t count_set_partitions(int n, int k) {
    if (n < 0 || k < 0) throw std::domain_error("count_set_partitions: negative argument");
    if (n > 12) throw combinatorics::CapacityError("count_set_partitions: n too large");
    if (n == 0) return k == 0 ? 1 : 0;
    // Assign each element to a block label; count assignments whose used
    // labels are exactly {0..k-1} with first occurrences in order (restricted
    // growth strings), which counts unordered block partitions once each.
    std::int64_t total = 0;
    std::vector<int> label(n, 0);
    std::function<void(int, int)> rec = [&](int index, int used) {
        if (index == n) {
            if (used == k) ++total;
            return;
        }
        for (int b = 0; b <= used && b < k; ++b) {
            label[index] = b;
            rec(index + 1, used + (b == used ? 1 : 0));
        }
    };
    rec(0, 0);
    return total;
}

double grid_equilibrium(const statmech::SpectrumModel& model, int m, int n_total,
                        double total_length, double temperature, int resolution) {
    if (m <= 0 || m >= n_total)
        throw statmech::DegenerateConfiguration("grid_equilibrium: wall runs to the box edge");
    if (resolution < 1000)
        throw std::domain_error("grid_equilibrium: resolution must be >= 10^3");

    statmech::BoxState state;
    state.m_left = m;
    state.m_right = n_total - m;
    state.temperature = temperature;
    state.total_length = total_length;
    auto abs_force = [&](double frac) {
        state.wall_position = frac;
        return std::abs(statmech::net_force(model, state));
    };

    int best = 1;
    double best_value = abs_force(1.0 / resolution);
    for (int i = 2; i < resolution; ++i) {
        double value = abs_force(static_cast<double>(i) / resolution);
        if (value < best_value) {
            best_value = value;
            best = i;
        }
    }

    // One golden-section refinement pass between the neighbors of the best cell.
    double a = static_cast<double>(best - 1) / resolution;
    double b = static_cast<double>(best + 1) / resolution;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = abs_force(c), fd = abs_force(d);
    for (int iter = 0; iter < 200 && (b - a) > 1e-13; ++iter) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = abs_force(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = abs_force(d);
        }
    }
    return 0.5 * (a + b) * total_length;
}

}  // namespace szilard::oracle
