#include "szilard/engine.hpp"

#include <cmath>

namespace szilard::engine {

void EngineConfig::validate() const {
    if (n_particles < 1) throw std::domain_error("EngineConfig: n_particles must be >= 1");
    if (purity < 0.0 || purity > 1.0) throw std::domain_error("EngineConfig: purity outside [0, 1]");
    if (!(std::abs(bias_r) < 0.5)) throw std::domain_error("EngineConfig: require |bias_r| < 1/2");
    if (gamma < 0.0) throw std::domain_error("EngineConfig: gamma must be non-negative");
}

WorkResult work_general(const ProbabilityTable& f, const ProbabilityTable& f_star) {
    if (f.probs.size() != f_star.probs.size())
        throw std::domain_error("work_general: table lengths differ");
    WorkResult result;
    result.per_branch.reserve(f.probs.size());
    for (size_t m = 0; m < f.probs.size(); ++m) {
        BranchContribution branch;
        branch.m = static_cast<int>(m);
        branch.f = f.probs[m];
        branch.f_star = f_star.probs[m];
        if (branch.f > 0.0) {
            if (branch.f_star <= 0.0)
                throw SingularReferenceError("work_general: f*_m = 0 with f_m > 0");
            branch.contribution = -branch.f * (f.log_probs[m] - f_star.log_probs[m]);
        }
        result.total += branch.contribution;
        result.per_branch.push_back(branch);
    }
    return result;
}

double work_two_bosons(double purity) {
    if (purity < 0.0 || purity > 1.0)
        throw std::domain_error("work_two_bosons: purity outside [0, 1]");
    double f0 = (1.0 + purity) / (4.0 + 2.0 * purity);
    return -2.0 * f0 * std::log(f0);
}

double binding_two_bosons(double purity) {
    return work_two_bosons(purity) - std::log(2.0);
}

double work_biased(int n, double r) {
    if (n < 1) throw std::domain_error("work_biased: require n >= 1");
    double beta = n * r;
    if (!(std::abs(beta) < 1.0))
        throw std::domain_error("work_biased: require |N r| < 1");
    return -std::log1p(-beta * beta);
}

WorkResult work_distinguishable_exact(int n) {
    if (n < 1 || n > 10000)
        throw std::domain_error("work_distinguishable_exact: require 1 <= n <= 10^4");
    auto f = combinatorics::measured_table_distinguishable(n);
    auto f_star = combinatorics::equilibrium_table_distinguishable(n);
    WorkResult result = work_general(f, f_star);
    result.flags.push_back(ApproximationFlag::ExactSum);
    return result;
}

double work_bosons_lowT(int n, double gamma) {
    if (n < 1) throw std::domain_error("work_bosons_lowT: require n >= 1");
    if (gamma < 0.0) throw std::domain_error("work_bosons_lowT: gamma must be non-negative");
    bool odd = n % 2 != 0;
    double alpha = odd ? 1.0 : static_cast<double>(n) / (n + 1);
    double work = alpha * std::log(n + 1.0);
    int m_max = odd ? (n - 1) / 2 : n / 2 - 1;  // empty for n <= 2
    if (gamma > 0.0 && m_max >= 1) {
        double sum = 0.0;
        for (int m = 1; m <= m_max; ++m) {
            double q = std::cbrt(static_cast<double>(n - m) / m);
            double a = 1.0 + q;
            sum += m * (a * a - (a * a) / (q * q));
        }
        work -= 2.0 * gamma / (n + 1.0) * sum;
    }
    return work;
}

double work_fermions_lowT(int n) {
    if (n < 1) throw std::domain_error("work_fermions_lowT: require n >= 1");
    return n % 2 != 0 ? std::log(2.0) : 0.0;
}

double capacitive_energy_first(int n, double gamma) {
    if (n < 1) throw std::domain_error("capacitive_energy_first: require n >= 1");
    return work_bosons_lowT(n + 1, gamma) - work_bosons_lowT(n, gamma);
}

double capacitive_energy_second(int n, double gamma) {
    if (n < 2) throw std::domain_error("capacitive_energy_second: require n >= 2");
    return work_bosons_lowT(n + 1, gamma) + work_bosons_lowT(n - 1, gamma) -
           2.0 * work_bosons_lowT(n, gamma);
}

double binding_energy_n(int n, double gamma) {
    return work_bosons_lowT(n, gamma) - work_fermions_lowT(n);
}

std::optional<int> critical_boson_number(double gamma, int cap) {
    if (gamma < 0.0) throw std::domain_error("critical_boson_number: gamma must be non-negative");
    if (gamma == 0.0) return std::nullopt;  // alpha ln(N+1) alone, unbounded
    for (int n = 2; n <= cap; ++n)
        if (work_bosons_lowT(n, gamma) <= 0.0) return n;
    return std::nullopt;
}

}  // namespace szilard::engine
