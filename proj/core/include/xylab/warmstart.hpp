#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xylab/train.hpp"

namespace xylab {

enum class QaoaMode { MA, SA };

struct ExperimentConfig {
    int p = 1;
    int restarts = 10;
    int steps_per_phase = 100;
    double lr = 0.05;
    std::uint64_t seed = 0;
    QaoaMode mode = QaoaMode::MA;
    bool warm_start = true;  // false: random full-circuit baseline arm
    bool finite_difference = false;
};

struct PhasePoint {
    int step = 0;
    double loss = 0.0;
    double ar = 0.0;
    double succ = 0.0;
};

struct RestartTrace {
    std::uint64_t seed = 0;
    std::vector<PhasePoint> pretrain;  // empty for the random arm
    std::vector<PhasePoint> refine;
    double transfer_gap = 0.0;  // |L_full(transferred) - L_ws(final)|
    double final_loss = 0.0;
    double final_ar = 0.0;
    double final_succ = 0.0;
};

struct RunRecord {
    ExperimentConfig config;
    std::string instance_label;
    std::vector<RestartTrace> restarts;
    double best_ar = 0.0;   // of the best-final-loss restart
    double best_succ = 0.0;  // same restart
};

struct Metrics {
    double ar = 0.0;
    double succ = 0.0;
};

/// AR = (<H_f> - E_max)/(E_min - E_max) and success probability
/// sum_{x in argmin} |psi_x|^2.  Throws on a degenerate spectrum.
Metrics metrics(const State& state, const std::vector<double>& diag, const SpectrumBounds& b);

/// Deterministic per-(master seed, restart, arm/mode) stream seed.
std::uint64_t derive_seed(std::uint64_t master, int restart, const std::string& arm);

/// Runs one arm of the experiment on `inst`:
///   warm-start arm: restrict (uniform [0,2pi) init of the restricted
///   circuit) -> pretrain -> transfer (RZZ/gamma slots zero) -> refine;
///   random arm: uniform init of the full circuit, refined for the same
///   number of steps as the warm-start arm's refine phase.
RunRecord warm_start_run(const ProblemInstance& inst, const ExperimentConfig& config);

}  // namespace xylab
