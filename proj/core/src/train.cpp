#include "xylab/train.hpp"

#include <cmath>
#include <stdexcept>

#include "xylab/errors.hpp"

namespace xylab {

TrainResult adam_optimize_fn(const std::function<double(const std::vector<double>&)>& f,
                             const std::function<std::vector<double>(const std::vector<double>&)>& g,
                             std::vector<double> params0, const AdamOptions& opt) {
    if (opt.steps < 0) throw validation_error("steps must be >= 0");
    TrainResult out;
    std::vector<double> m(params0.size(), 0.0), v(params0.size(), 0.0);
    std::vector<double>& p = params0;

    auto record = [&](int step) {
        const double loss = f(p);
        if (!std::isfinite(loss)) throw std::runtime_error("non-finite loss during training");
        TracePoint tp;
        tp.step = step;
        tp.loss = loss;
        if (opt.record_params) tp.params = p;
        out.trace.push_back(std::move(tp));
    };

    record(0);
    for (int t = 1; t <= opt.steps; ++t) {
        const std::vector<double> grad = g(p);
        const double b1t = 1.0 - std::pow(opt.beta1, t);
        const double b2t = 1.0 - std::pow(opt.beta2, t);
        for (std::size_t i = 0; i < p.size(); ++i) {
            m[i] = opt.beta1 * m[i] + (1.0 - opt.beta1) * grad[i];
            v[i] = opt.beta2 * v[i] + (1.0 - opt.beta2) * grad[i] * grad[i];
            p[i] -= opt.lr * (m[i] / b1t) / (std::sqrt(v[i] / b2t) + opt.eps);
        }
        record(t);
    }
    out.params = p;
    return out;
}

TrainResult adam_optimize(const Circuit& c, std::vector<double> params0,
                          const ProblemInstance& inst, const std::vector<double>& diag,
                          const AdamOptions& opt) {
    auto f = [&](const std::vector<double>& p) { return evaluate_loss(c, p, inst, diag); };
    auto g = [&](const std::vector<double>& p) {
        return opt.finite_difference ? gradient_fd(c, p, inst, diag)
                                     : gradient(c, p, inst, diag);
    };
    return adam_optimize_fn(f, g, std::move(params0), opt);
}

}  // namespace xylab
