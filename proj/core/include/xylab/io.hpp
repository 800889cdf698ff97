#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "xylab/embeddings.hpp"
#include "xylab/warmstart.hpp"

namespace xylab {

/// Instance JSON: {n, k, const, h:[{i,c}], J:[{i,j,c}], label}, 0-based sites.
nlohmann::json instance_to_json(const ProblemInstance& inst);
ProblemInstance instance_from_json(const nlohmann::json& j);
void write_instance(const std::string& path, const ProblemInstance& inst);
ProblemInstance read_instance(const std::string& path);

/// RunRecord JSON: {config, instance, restarts:[{seed, pretrain/refine phase
/// traces of {step, loss, ar, succ}}], summary:{best_ar, best_succ}} plus a
/// top-level timestamp.  `timestamp` empty -> current UTC time; pass a fixed
/// string for reproducible output.
nlohmann::json run_record_to_json(const RunRecord& record, const ProblemInstance& inst,
                                  const std::string& timestamp = "");

/// Per-step CSV rows "step,arm,ar,succ" for the best-final-loss restart of
/// each record; header included.
void write_step_csv(std::ostream& os, const std::vector<RunRecord>& records);

/// Long-format sweep CSV: one row per record with label, arm, p and the
/// best-of-restarts metrics: "instance,arm,p,best_ar,best_succ".
void write_sweep_csv(std::ostream& os, const std::vector<RunRecord>& records);

std::string arm_name(const ExperimentConfig& config);
std::string utc_timestamp();

}  // namespace xylab
