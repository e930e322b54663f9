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

#ifndef QREM_ENERGY_HPP
#define QREM_ENERGY_HPP

#include <cstdint>
#include <string_view>
#include <vector>

namespace qrem {

// Time-energy bookkeeping, decoupled from the simulated states. Everything
// here is plain arithmetic on the bound (orthogonal switch time >= h/(4 dE))
// and its n-times-relaxed form for switches between neighboring register
// states. Natural units h = 1 by default; pass Planck's constant for SI.

enum class Scheme { kClassicalBits, kSingleQubit, kGhz, kClassicalRotator };

std::string_view to_string(Scheme scheme);

/// Accounting record for one run: which scheme, at what coupling, how many
/// pulses were charged. Never reads simulation state.
struct EnergyLedger {
    EnergyLedger(Scheme scheme, double h, double delta_e, double tau,
                 std::uint64_t pulse_count);

    Scheme scheme;
    double h;
    double delta_e;
    double tau;
    std::uint64_t pulse_count;
};

/// Minimal total time for a classical counter over N characters at coupling
/// delta_e: N*h/(4*delta_e).
double classical_min_total_time(std::uint64_t length, double delta_e, double h = 1.0);

/// Coupling needed to advance by pi/n within tau: h/(4*n*tau).
double qubit_pulse_coupling(std::uint64_t n, double tau, double h = 1.0);

/// Classical minimal time over quantum total time at equal coupling: n.
double quantum_speedup_factor(std::uint64_t n);

/// Per-step slowdown of a classical spin-S rotator at equal coupling: 2S.
double rotator_time_factor(double spin);

/// One comparison row at a common coupling delta_e = h/(4*n*tau).
struct LedgerRow {
    Scheme scheme;
    double coupling_energy;
    double pulse_time;               // minimal per-character time at that coupling
    double total_time;               // over N characters
    double time_factor_vs_qubit;     // pulse_time / qubit pulse_time
    double ratio_vs_classical_bound; // classical bound / total_time
};

/// The final readout is charged as one flat scheme-independent constant,
/// reported separately: it happens once and does not scale with N.
struct LedgerReport {
    std::uint64_t n = 1;
    std::uint64_t length = 1;
    double tau = 1.0;
    double h = 1.0;
    double spin = 0.5;
    double final_measurement_time = 0.0;
    std::vector<LedgerRow> rows;
};

/// Builds the four-scheme comparison. Accepts n >= 1 (n = 1 means no
/// nonorthogonal advantage), wider than the automaton's n >= 2 regime.
LedgerReport ledger_report(std::uint64_t n, std::uint64_t length, double tau, double h,
                           double spin, double final_measurement_time = 0.0);

}  // namespace qrem

#endif
