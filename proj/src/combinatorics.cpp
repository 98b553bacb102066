#include "szilard/combinatorics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace szilard::combinatorics {

namespace {

void check_range(int n, int m, const char* who) {
    if (n < 0 || m < 0 || m > n)
        throw std::domain_error(std::string(who) + ": require 0 <= m <= n");
}

constexpr double neg_inf = -std::numeric_limits<double>::infinity();

}  // namespace

BigInt multiplicity(int n, int m) {
    check_range(n, m, "multiplicity");
    if (m > n - m) m = n - m;
    BigInt result = 1;
    for (int i = 1; i <= m; ++i) {
        result *= n - m + i;
        result /= i;
    }
    return result;
}

double log_multiplicity(int n, int m) {
    check_range(n, m, "log_multiplicity");
    return std::lgamma(n + 1.0) - std::lgamma(m + 1.0) - std::lgamma(n - m + 1.0);
}

BigRational f_distinguishable_exact(int n, int m) {
    check_range(n, m, "f_distinguishable");
    BigInt denom = BigInt(1) << n;
    return BigRational(multiplicity(n, m), denom);
}

double f_distinguishable(int n, int m) {
    check_range(n, m, "f_distinguishable");
    return std::exp(log_multiplicity(n, m) - n * std::log(2.0));
}

double f_equilibrium_distinguishable(int n, int m) {
    check_range(n, m, "f_equilibrium_distinguishable");
    if (m == 0 || m == n) return 1.0;  // 0^0 = 1 at the endpoints
    double frac = static_cast<double>(m) / n;
    double log_value = log_multiplicity(n, m) + m * std::log(frac) +
                       (n - m) * std::log1p(-frac);
    return std::exp(log_value);
}

double f_biased(int n, int m, double r) {
    check_range(n, m, "f_biased");
    if (!(std::abs(r) < 0.5))
        throw std::domain_error("f_biased: require |r| < 1/2");
    if (r == 0.0) return f_distinguishable(n, m);
    double log_value = log_multiplicity(n, m) + m * std::log(0.5 + r) +
                       (n - m) * std::log(0.5 - r);
    return std::exp(log_value);
}

double f_gaussian_approx(int n, double m_prime) {
    if (n < 1) throw std::domain_error("f_gaussian_approx: require n >= 1");
    if (std::abs(m_prime) > n / 2.0)
        throw std::domain_error("f_gaussian_approx: require |m'| <= n/2");
    double delta = 2.0 * m_prime / n;
    return std::exp(-0.5 * n * delta * delta);
}

double f_indistinguishable_lowT(int n, int m) {
    check_range(n, m, "f_indistinguishable_lowT");
    return 1.0 / (n + 1.0);
}

BigInt stirling2(int n, int k) {
    if (n < 0 || k < 0) throw std::domain_error("stirling2: negative argument");
    if (k > n) return 0;
    if (n == 0) return 1;  // S(0,0)
    if (k == 0) return 0;
    // S(n,k) = k S(n-1,k) + S(n-1,k-1), one rolling row.
    std::vector<BigInt> row(k + 1);
    row[0] = 1;  // S(0,0)
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j)
            row[j] = j * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[k];
}

BigInt omega_indistinguishable_partitions(int n) {
    if (n < 1) throw std::domain_error("omega_indistinguishable_partitions: require n >= 1");
    return 1 + stirling2(n, 2);
}

namespace {

ProbabilityTable make_table(int n, TableKind kind) {
    ProbabilityTable t;
    t.n_particles = n;
    t.kind = kind;
    t.probs.resize(n + 1);
    t.log_probs.resize(n + 1);
    return t;
}

}  // namespace

ProbabilityTable measured_table_distinguishable(int n) {
    auto t = make_table(n, TableKind::Measured);
    if (n <= ProbabilityTable::rational_limit) {
        t.exact = true;
        for (int m = 0; m <= n; ++m) {
            t.probs[m] = static_cast<double>(f_distinguishable_exact(n, m));
            t.log_probs[m] = log_multiplicity(n, m) - n * std::log(2.0);
        }
    } else {
        for (int m = 0; m <= n; ++m) {
            t.log_probs[m] = log_multiplicity(n, m) - n * std::log(2.0);
            t.probs[m] = std::exp(t.log_probs[m]);
        }
    }
    return t;
}

ProbabilityTable equilibrium_table_distinguishable(int n) {
    auto t = make_table(n, TableKind::Equilibrium);
    for (int m = 0; m <= n; ++m) {
        if (m == 0 || m == n) {
            t.probs[m] = 1.0;
            t.log_probs[m] = 0.0;
        } else {
            double frac = static_cast<double>(m) / n;
            t.log_probs[m] = log_multiplicity(n, m) + m * std::log(frac) +
                             (n - m) * std::log1p(-frac);
            t.probs[m] = std::exp(t.log_probs[m]);
        }
    }
    return t;
}

ProbabilityTable measured_table_biased(int n, double r) {
    if (!(std::abs(r) < 0.5))
        throw std::domain_error("measured_table_biased: require |r| < 1/2");
    auto t = make_table(n, TableKind::Measured);
    for (int m = 0; m <= n; ++m) {
        t.log_probs[m] = log_multiplicity(n, m) + m * std::log(0.5 + r) +
                         (n - m) * std::log(0.5 - r);
        t.probs[m] = std::exp(t.log_probs[m]);
    }
    return t;
}

ProbabilityTable measured_table_indistinguishable_lowT(int n) {
    auto t = make_table(n, TableKind::Measured);
    t.exact = true;
    double p = 1.0 / (n + 1.0);
    for (int m = 0; m <= n; ++m) {
        t.probs[m] = p;
        t.log_probs[m] = -std::log(n + 1.0);
    }
    return t;
}

void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& visit) {
    if (n < 1 || n > max_partition_n)
        throw CapacityError("for_each_partition: n outside 1.." +
                            std::to_string(max_partition_n));
    std::vector<int> parts;
    // Descending recursive enumeration: next part <= previous part.
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            visit(parts);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            parts.push_back(part);
            rec(remaining - part, part);
            parts.pop_back();
        }
    };
    rec(n, n);
}

std::vector<IntegerPartition> integer_partitions(int n) {
    std::vector<IntegerPartition> result;
    for_each_partition(n, [&](const std::vector<int>& parts) {
        result.push_back(IntegerPartition{parts});
    });
    return result;
}

BigInt partition_count(int n) {
    if (n < 0) throw std::domain_error("partition_count: negative n");
    std::vector<BigInt> p(n + 1);
    p[0] = 1;
    for (int i = 1; i <= n; ++i) {
        BigInt sum = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > i && g2 > i) break;
            BigInt term = 0;
            if (g1 <= i) term += p[i - g1];
            if (g2 <= i) term += p[i - g2];
            if (k % 2 == 0) term = -term;
            sum += term;
        }
        p[i] = sum;
    }
    return p[n];
}

}  // namespace szilard::combinatorics
