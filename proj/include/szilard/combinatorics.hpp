#pragma once

#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace szilard::combinatorics {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Thrown when an enumeration request exceeds the supported size.
struct CapacityError : std::domain_error {
    using std::domain_error::domain_error;
};

enum class TableKind { Measured, Equilibrium };

/// Probabilities f_m (or equilibrium references f*_m) over m = 0..N.
///
/// Measured tables sum to 1; equilibrium tables are per-branch references
/// and need not normalize (f*_0 = f*_N = 1). Tables built from exact
/// rational arithmetic (N <= rational_limit) carry exact = true.
struct ProbabilityTable {
    int n_particles = 0;
    TableKind kind = TableKind::Measured;
    std::vector<double> probs;      // length N+1
    std::vector<double> log_probs;  // natural log; -inf where the entry underflows
    bool exact = false;

    static constexpr int rational_limit = 64;
};

// Exact binomial coefficient C(n, m). Throws std::domain_error for m out of range.
BigInt multiplicity(int n, int m);

// ln C(n, m) via lgamma, for sweeps beyond exact-arithmetic sizes.
double log_multiplicity(int n, int m);

// Eq.-(7)-style measured probability C(n,m)/2^n.
double f_distinguishable(int n, int m);
BigRational f_distinguishable_exact(int n, int m);

// Equilibrium reference C(n,m) (m/n)^m (1-m/n)^(n-m), with 0^0 = 1 so the
// endpoints return 1 exactly.
double f_equilibrium_distinguishable(int n, int m);

// Biased measured probability C(n,m) (1/2+r)^m (1/2-r)^(n-m); |r| < 1/2.
double f_biased(int n, int m, double r);

// Gaussian large-N ratio exp(-n*delta^2/2), delta = 2*m_prime/n, normalized
// to 1 at the peak m_prime = 0.
double f_gaussian_approx(int n, double m_prime);

// Low-temperature indistinguishable-particle probability 1/(n+1).
double f_indistinguishable_lowT(int n, int m);

// Stirling number of the second kind, S(0,0) = 1.
BigInt stirling2(int n, int k);

// Microstate count 1 + S(n,2) for indistinguishable engine sides.
BigInt omega_indistinguishable_partitions(int n);

ProbabilityTable measured_table_distinguishable(int n);
ProbabilityTable equilibrium_table_distinguishable(int n);
ProbabilityTable measured_table_biased(int n, double r);
ProbabilityTable measured_table_indistinguishable_lowT(int n);

/// Weakly decreasing positive parts summing to N.
struct IntegerPartition {
    std::vector<int> parts;
};

inline constexpr int max_partition_n = 120;

// Visits every partition of n in canonical (lexicographically decreasing)
// order. The visitor receives the parts of one partition at a time.
void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& visit);

// All partitions of n, canonical descending order. 1 <= n <= max_partition_n.
std::vector<IntegerPartition> integer_partitions(int n);

// Partition function p(n) via the pentagonal-number recurrence.
BigInt partition_count(int n);

}  // namespace szilard::combinatorics
