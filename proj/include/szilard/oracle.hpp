#pragma once

#include <cstdint>
#include <vector>

#include "szilard/combinatorics.hpp"
#include "szilard/statmech.hpp"

// Brute-force ground truth for the combinatorial and equilibrium quantities.
// Everything here is exhaustive at small N; the analytic implementations are
// checked against these enumerations, never the other way around.
namespace szilard::oracle {

inline constexpr int max_enumeration_n = 20;  // 2^N placements

/// Explicit microstates with a histogram of left-side occupation counts.
struct MicrostateSet {
    int n_particles = 0;
    std::vector<std::uint32_t> states;     // per-particle side bitmask (bit set = left)
    std::vector<std::int64_t> histogram;   // index m = 0..N
};

// All 2^N placements of N labeled particles over two sides.
MicrostateSet enumerate_distinguishable(int n);

// The N+1 occupation pairs (m, N-m); states holds m encoded directly.
MicrostateSet enumerate_indistinguishable_particles(int n);

/// Equivalence classes of placements under the side-swap mirror.
struct SideClass {
    std::uint32_t representative = 0;  // the numerically smaller of mask/complement
    int size = 0;                      // 1 or 2 microstates
    int m_low = 0;                     // min(m, N-m) for the class
};

struct SideClassSet {
    int n_particles = 0;
    std::vector<SideClass> classes;

    // Classes per m_low = 0..N/2 (the paper's merged counting).
    std::vector<std::int64_t> class_count_histogram() const;
    // Microstate-weighted probability of a class bucket, size over 2^N.
    double class_probability(int m_low) const;
};

// Merge each placement with its side-swap mirror; class count equals
// 1 + S(N, 2).
SideClassSet enumerate_indistinguishable_sides(int n);

// Set partitions of {1..n} into exactly k nonempty blocks, counted by
// explicit enumeration (independent of the stirling2 recurrence).
std::int64_t count_set_partitions(int n, int k);

// Wall position minimizing |net_force| over a uniform grid, refined once by
// golden-section search between the neighbors of the best cell.
double grid_equilibrium(const statmech::SpectrumModel& model, int m, int n_total,
                        double total_length, double temperature, int resolution);

}  // namespace szilard::oracle
