#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "szilard/combinatorics.hpp"

namespace szilard::engine {

using combinatorics::ProbabilityTable;

/// f*_m = 0 where f_m > 0: the work functional is undefined.
struct SingularReferenceError : std::domain_error {
    using std::domain_error::domain_error;
};

enum class Statistics { Distinguishable, BosonLowT, FermionLowT, TwoBosonPurity };

enum class PartitionKind { DistinguishableSides, IndistinguishableSides };

struct EngineConfig {
    int n_particles = 1;
    Statistics statistics = Statistics::Distinguishable;
    PartitionKind partition_kind = PartitionKind::DistinguishableSides;
    double purity = 1.0;      // p, TwoBosonPurity only
    double bias_r = 0.0;      // |r| < 1/2
    double gamma = 0.0;       // hbar*omega / k_B T
    double temperature = 0.0; // kelvin, unit conversion only

    void validate() const;
};

enum class ApproximationFlag {
    ExactSum,         // full sum returned; the paper's large-N zero is a dominant-term limit
    DominantTermOnly, // closed form derived with the peak term only
    TruncatedTail,
};

struct BranchContribution {
    int m = 0;
    double f = 0.0;
    double f_star = 0.0;
    double contribution = 0.0;  // -f ln(f/f*)
};

struct WorkResult {
    double total = 0.0;  // units of k_B*T
    std::vector<BranchContribution> per_branch;
    std::vector<ApproximationFlag> flags;
};

// W = -sum_m f_m ln(f_m / f*_m). Branches with f_m = 0 contribute zero.
WorkResult work_general(const ProbabilityTable& f, const ProbabilityTable& f_star);

// Two-boson work -2 f_0 ln f_0 with f_0 = (1+p)/(4+2p), p in [0, 1].
double work_two_bosons(double purity);

// work_two_bosons(p) - ln 2.
double binding_two_bosons(double purity);

// Biased-machine closed form -ln(1 - beta^2), beta = n*r, |beta| < 1.
double work_biased(int n, double r);

// Exact sum of the work functional over the distinguishable high-T tables.
WorkResult work_distinguishable_exact(int n);

// N-boson low-temperature work: alpha ln(N+1) minus the confinement sum,
// alpha = 1 (odd N) or N/(N+1) (even N); sum runs m = 1..(N-1)/2 for odd N
// and m = 1..N/2-1 for even N (empty for N <= 2).
double work_bosons_lowT(int n, double gamma);

// ln 2 for odd N, 0 for even N.
double work_fermions_lowT(int n);

// First and second differences of work_bosons_lowT in N.
double capacitive_energy_first(int n, double gamma);
double capacitive_energy_second(int n, double gamma);

// work_bosons_lowT(N, gamma) - work_fermions_lowT(N).
double binding_energy_n(int n, double gamma);

// Smallest N >= 2 with work_bosons_lowT(N, gamma) <= 0, scanning upward.
// Returns nullopt for gamma = 0 (work grows without bound) and when no such
// N exists below `cap`.
std::optional<int> critical_boson_number(double gamma, int cap = 100000);

}  // namespace szilard::engine
