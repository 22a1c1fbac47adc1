#pragma once

#include <string>
#include <vector>

#include "subtree/experiment_config.hpp"
#include "subtree/report.hpp"

namespace subtree {

/// Names accepted by run_experiment, in a fixed order.
std::vector<std::string> experiment_names();

/// The built-in grid, trial count and depth for an experiment. Throws
/// std::invalid_argument for an unknown name.
ExperimentConfig default_config(const std::string& name);

/// Dispatches on config.name. Results depend only on the config and master
/// seed, never on config.threads.
Report run_experiment(const ExperimentConfig& config);

Report run_complete_limit(const ExperimentConfig& config);
Report run_bipartite_limit(const ExperimentConfig& config);
Report run_gnp_dense(const ExperimentConfig& config);
Report run_poisson_ratios(const ExperimentConfig& config);
Report run_janson_clt(const ExperimentConfig& config);
Report run_whp_events(const ExperimentConfig& config);
Report run_sparse_decay(const ExperimentConfig& config);
Report run_counterexamples(const ExperimentConfig& config);
Report run_mean_order(const ExperimentConfig& config);
/// Assertion experiment: every violation is counted in Report::violations.
Report run_pair_identities(const ExperimentConfig& config);

}  // namespace subtree
