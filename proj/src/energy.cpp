// Copyright 2026 The qrem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qrem/energy.hpp"

#include <cmath>
#include <stdexcept>

namespace qrem {

namespace {

void check_positive(double value, const char* what) {
    if (!std::isfinite(value) || value <= 0.0) {
        throw std::invalid_argument(std::string(what) + " must be positive and finite");
    }
}

}  // namespace

std::string_view to_string(Scheme scheme) {
    switch (scheme) {
        case Scheme::kClassicalBits: return "classical-bits";
        case Scheme::kSingleQubit: return "single-qubit";
        case Scheme::kGhz: return "ghz";
        case Scheme::kClassicalRotator: return "classical-rotator";
    }
    return "unknown";
}

EnergyLedger::EnergyLedger(Scheme scheme_in, double h_in, double delta_e_in, double tau_in,
                           std::uint64_t pulse_count_in)
    : scheme(scheme_in), h(h_in), delta_e(delta_e_in), tau(tau_in),
      pulse_count(pulse_count_in) {
    check_positive(h, "EnergyLedger: h");
    check_positive(tau, "EnergyLedger: tau");
    if (!std::isfinite(delta_e) || delta_e < 0.0) {
        throw std::invalid_argument("EnergyLedger: delta_e must be >= 0");
    }
}

double classical_min_total_time(std::uint64_t length, double delta_e, double h) {
    check_positive(delta_e, "classical_min_total_time: delta_e");
    check_positive(h, "classical_min_total_time: h");
    if (length < 1) {
        throw std::invalid_argument("classical_min_total_time: length must be >= 1");
    }
    return static_cast<double>(length) * h / (4.0 * delta_e);
}

double qubit_pulse_coupling(std::uint64_t n, double tau, double h) {
    if (n < 1) {
        throw std::invalid_argument("qubit_pulse_coupling: n must be >= 1");
    }
    check_positive(tau, "qubit_pulse_coupling: tau");
    check_positive(h, "qubit_pulse_coupling: h");
    return h / (4.0 * static_cast<double>(n) * tau);
}

double quantum_speedup_factor(std::uint64_t n) {
    if (n < 1) {
        throw std::invalid_argument("quantum_speedup_factor: n must be >= 1");
    }
    return static_cast<double>(n);
}

double rotator_time_factor(double spin) {
    if (!(spin >= 0.5)) {
        throw std::invalid_argument("rotator_time_factor: spin must be >= 1/2");
    }
    return 2.0 * spin;
}

LedgerReport ledger_report(std::uint64_t n, std::uint64_t length, double tau, double h,
                           double spin, double final_measurement_time) {
    if (n < 1) {
        throw std::invalid_argument("ledger_report: n must be >= 1");
    }
    if (length < 1) {
        throw std::invalid_argument("ledger_report: length must be >= 1");
    }
    check_positive(tau, "ledger_report: tau");
    check_positive(h, "ledger_report: h");
    if (!(spin >= 0.5)) {
        throw std::invalid_argument("ledger_report: spin must be >= 1/2");
    }
    if (!std::isfinite(final_measurement_time) || final_measurement_time < 0.0) {
        throw std::invalid_argument("ledger_report: measurement time must be >= 0");
    }

    LedgerReport report;
    report.n = n;
    report.length = length;
    report.tau = tau;
    report.h = h;
    report.spin = spin;
    report.final_measurement_time = final_measurement_time;

    const double delta_e = qubit_pulse_coupling(n, tau, h);
    const double bound = classical_min_total_time(length, delta_e, h);
    const double chars = static_cast<double>(length);

    const auto add = [&](Scheme scheme, double pulse_time) {
        const double total = chars * pulse_time;
        report.rows.push_back(LedgerRow{scheme, delta_e, pulse_time, total,
                                        pulse_time / tau, bound / total});
    };
    add(Scheme::kClassicalBits, h / (4.0 * delta_e));
    add(Scheme::kSingleQubit, tau);
    add(Scheme::kGhz, tau);
    add(Scheme::kClassicalRotator, rotator_time_factor(spin) * tau);
    return report;
}

}  // namespace qrem
