#include "szilard/datasets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "szilard/engine.hpp"

namespace szilard::datasets {

int output_precision() {
    if (const char* env = std::getenv("SZILARD_PRECISION")) {
        int value = std::atoi(env);
        if (value >= 1 && value <= 17) return value;
    }
    return 12;
}

std::string format_value(double value, int precision) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*g", precision, value);
    return buffer;
}

std::string to_csv(const Table& table, int precision) {
    std::string out;
    for (size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out += ',';
        out += table.columns[c];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += format_value(row[c], precision);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table& table, int precision) {
    std::string out = "[\n";
    for (size_t r = 0; r < table.rows.size(); ++r) {
        out += "  {";
        for (size_t c = 0; c < table.rows[r].size(); ++c) {
            if (c) out += ", ";
            out += '"' + table.columns[c] + "\": " + format_value(table.rows[r][c], precision);
        }
        out += r + 1 < table.rows.size() ? "},\n" : "}\n";
    }
    out += "]\n";
    return out;
}

std::vector<double> range_points(double start, double stop, double step) {
    if (!(step > 0.0)) throw std::domain_error("range_points: step must be positive");
    if (stop < start) throw std::domain_error("range_points: empty range");
    auto count = static_cast<long long>(std::floor((stop - start) / step + 1e-9));
    std::vector<double> points;
    points.reserve(static_cast<size_t>(count) + 1);
    for (long long i = 0; i <= count; ++i)
        points.push_back(std::min(start + static_cast<double>(i) * step, stop));
    return points;
}

Table figure_binding_vs_purity() {
    Table table;
    table.columns = {"p", "E_b"};
    for (double p : range_points(0.0, 1.0, 0.01))
        table.rows.push_back({p, engine::binding_two_bosons(p)});
    return table;
}

Table figure_capacitive_energies() {
    Table table;
    table.columns = {"N", "parity", "Ec1_gamma0", "Ec1_gamma0.1", "Ec2_gamma0"};
    for (int n = 2; n <= 60; ++n) {
        table.rows.push_back({static_cast<double>(n), static_cast<double>(n % 2),
                              engine::capacitive_energy_first(n, 0.0),
                              engine::capacitive_energy_first(n, 0.1),
                              engine::capacitive_energy_second(n, 0.0)});
    }
    return table;
}

Table figure_binding_vs_n() {
    Table table;
    table.columns = {"N", "parity", "Eb_gamma0", "Eb_gamma0.05", "Eb_gamma0.1"};
    for (int n = 2; n <= 60; ++n) {
        table.rows.push_back({static_cast<double>(n), static_cast<double>(n % 2),
                              engine::binding_energy_n(n, 0.0),
                              engine::binding_energy_n(n, 0.05),
                              engine::binding_energy_n(n, 0.1)});
    }
    return table;
}

}  // namespace szilard::datasets
