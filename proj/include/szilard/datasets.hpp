#pragma once

#include <string>
#include <vector>

namespace szilard::datasets {

/// A rectangular numeric dataset with named columns; the unit every figure
/// and sweep command renders from.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// Rendering precision: significant digits, default 12, overridable through
// the SZILARD_PRECISION environment variable.
int output_precision();

std::string format_value(double value, int precision);

// Comma-separated, '.' decimal, LF line endings, header row first.
std::string to_csv(const Table& table, int precision);

// Array of row objects keyed by column name.
std::string to_json(const Table& table, int precision);

// Evenly spaced points start, start + step, ... computed by index so no
// rounding error accumulates; the final point is clamped to stop.
std::vector<double> range_points(double start, double stop, double step);

// Binding energy vs bosonic quality: columns (p, E_b), p = 0..1 step 0.01.
Table figure_binding_vs_purity();

// Capacitive energies vs N: columns (N, parity, Ec1_gamma0, Ec1_gamma0.1,
// Ec2_gamma0), N = 2..60.
Table figure_capacitive_energies();

// Binding energies vs N: columns (N, parity, Eb_gamma0, Eb_gamma0.05,
// Eb_gamma0.1), N = 2..60.
Table figure_binding_vs_n();

}  // namespace szilard::datasets
