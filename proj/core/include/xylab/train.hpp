#pragma once

#include <functional>
#include <vector>

#include "xylab/circuits.hpp"

namespace xylab {

/// One recorded training step.
struct TracePoint {
    int step = 0;  // 0 is the pre-training evaluation
    double loss = 0.0;
    std::vector<double> params;  // parameters at this step (post-update)
};

struct AdamOptions {
    int steps = 100;
    double lr = 0.05;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    bool record_params = false;  // keep per-step parameter vectors in the trace
    bool finite_difference = false;  // use central differences instead of shifts
};

struct TrainResult {
    std::vector<double> params;  // final parameters
    std::vector<TracePoint> trace;  // step 0 .. steps
};

/// Standard Adam minimizing evaluate_loss; deterministic given params0.
/// Throws on non-finite loss.
TrainResult adam_optimize(const Circuit& c, std::vector<double> params0,
                          const ProblemInstance& inst, const std::vector<double>& diag,
                          const AdamOptions& opt);

/// Generic-objective overload used by the optimizer's own unit tests.
TrainResult adam_optimize_fn(const std::function<double(const std::vector<double>&)>& f,
                             const std::function<std::vector<double>(const std::vector<double>&)>& g,
                             std::vector<double> params0, const AdamOptions& opt);

}  // namespace xylab
