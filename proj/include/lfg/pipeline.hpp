#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "lfg/error.hpp"
#include "lfg/graph.hpp"
#include "lfg/manifest.hpp"

namespace lfg {

inline constexpr const char *kToolVersion = "1.0.0";

struct PipelineConfig
{
  std::string input_name; ///< echoed in the manifest
  graph::Graph graph;
  std::uint32_t p = 3;
  std::size_t depth_k = 1;
  std::size_t depth_d = 1;
  std::string a_group = "C2";
  std::string h0_group = "A5";
  Budgets budgets;
  std::uint64_t seed = 20240601;
  bool force = false;
  std::size_t omni_max_f = 2;
  std::size_t omni_max_g = 4;
  std::size_t samples = 1000;

  /// Throws std::invalid_argument on an even or composite p.
  void validate() const;
};

enum class PipelineStatus { Complete, Refused, ChecksFailed, BudgetExceeded };

struct PipelineResult
{
  PipelineStatus status = PipelineStatus::Complete;
  Manifest manifest;
  /// Artifact file name -> contents; includes "manifest.txt".
  std::map<std::string, std::string> artifacts;
  std::string message;
};

/// Runs the finite reduction G -> (G_k, Γ(G), Γ'(G) <= Γ(G_k), D-stage,
/// omni audit). Pure: nothing is written to disk.
PipelineResult run_pipeline(const PipelineConfig &cfg);

/// Writes every artifact into `dir`, creating it if needed.
void write_artifacts(const PipelineResult &r, const std::string &dir);

} // namespace lfg
