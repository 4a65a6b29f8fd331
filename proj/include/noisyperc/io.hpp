#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "noisyperc/closedform.hpp"
#include "noisyperc/infer.hpp"
#include "noisyperc/process.hpp"

namespace noisyperc::io {

/// Shortest round-trip decimal form ("0.7", "1", "0.0125").
std::string format_number(double value);

/// `# key=value` metadata lines followed by `t,m,s1,s2,m_obs,s1_obs,s2_obs`.
void write_trajectory_csv(std::ostream& out, const TrajectoryRecord& traj);

/// Per-step edge sets, one "u v" per line, blocks separated by a blank line.
void write_edge_blocks(std::ostream& out, const std::vector<std::vector<Edge>>& blocks);

/// A trajectory read back from disk: either a summary CSV or edge-list blocks.
struct IngestedTrajectory {
  std::map<std::string, std::string> metadata;
  std::optional<std::uint32_t> n;
  std::vector<std::uint32_t> s1;
  std::vector<std::uint32_t> s2;
  bool from_observed_columns = false;

  std::size_t length() const { return s1.size(); }
};

enum class ColumnChoice { Auto, Latent, Observed };

/// CSV with (at least) `t,s1,s2` columns, or `s1_obs,s2_obs` when present and
/// selected. Auto prefers observed columns when they are filled in.
IngestedTrajectory read_summary_csv(std::istream& in, ColumnChoice columns = ColumnChoice::Auto);

/// Edge-list blocks; every blank line closes a block, so an empty edge set is an
/// empty block. `n` may come from a `# n=` line instead.
IngestedTrajectory read_edge_blocks(std::istream& in, std::optional<std::uint32_t> n);

/// Dispatches on content: a comma on the first data line selects the CSV reader.
IngestedTrajectory read_trajectory(std::istream& in, std::optional<std::uint32_t> n,
                                   ColumnChoice columns = ColumnChoice::Auto);

/// `run_id,kind,value,censored`
void write_statistic_csv(std::ostream& out, const StatisticSample& sample);

/// `fpr,tpr`
void write_roc_csv(std::ostream& out, const RocCurve& curve);

/// `table,from,to_0,to_1,row_sum,row_defined,row_stochastic`
void write_table_csv_header(std::ostream& out);
void write_table_csv_rows(std::ostream& out, const closedform::TransitionTable& table);

} // namespace noisyperc::io
