#include "noisyperc/io.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace noisyperc::io {

std::string format_number(double value) { return fmt::format("{}", value); }

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::uint32_t parse_count(const std::string& text, std::size_t lineno) {
  std::uint64_t value = 0;
  const auto* begin = text.data();
  const auto* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || value > UINT32_MAX)
    throw std::invalid_argument("line " + std::to_string(lineno) + ": expected a nonnegative integer, got '" + text + "'");
  return static_cast<std::uint32_t>(value);
}

// `# key=value` -> metadata; other comment lines are ignored.
void parse_comment(const std::string& line, std::map<std::string, std::string>& metadata) {
  const auto body = trim(std::string_view(line).substr(1));
  const auto eq = body.find('=');
  if (eq == std::string::npos) return;
  metadata[trim(std::string_view(body).substr(0, eq))] = trim(std::string_view(body).substr(eq + 1));
}

void apply_n(IngestedTrajectory& traj) {
  const auto it = traj.metadata.find("n");
  if (it != traj.metadata.end() && !traj.n) traj.n = parse_count(it->second, 0);
}

} // namespace

void write_trajectory_csv(std::ostream& out, const TrajectoryRecord& traj) {
  const auto& c = traj.config;
  out << "# model=" << to_string(c.model) << '\n';
  out << "# n=" << c.n << '\n';
  out << "# T=" << c.steps << '\n';
  out << "# p=" << format_number(c.p) << '\n';
  out << "# q=" << format_number(c.q) << '\n';
  out << "# alpha=" << (c.noise ? format_number(c.noise->alpha) : "") << '\n';
  out << "# beta=" << (c.noise ? format_number(c.noise->beta) : "") << '\n';
  out << "# seed=" << traj.seed << '\n';
  out << "# initial_y=" << c.initial_y << '\n';
  out << "# timing=Y_t drawn at the start of step t and applied to G_{t-1} to give G_t\n";
  out << "t,m,s1,s2,m_obs,s1_obs,s2_obs\n";
  const bool obs = traj.has_observed();
  for (std::size_t t = 0; t < traj.length(); ++t) {
    out << t << ',' << traj.m[t] << ',' << traj.s1[t] << ',' << traj.s2[t] << ',';
    if (obs)
      out << traj.m_obs[t] << ',' << traj.s1_obs[t] << ',' << traj.s2_obs[t];
    else
      out << ",,";
    out << '\n';
  }
}

void write_edge_blocks(std::ostream& out, const std::vector<std::vector<Edge>>& blocks) {
  for (const auto& block : blocks) {
    write_edge_list(out, block);
    out << '\n';
  }
}

IngestedTrajectory read_summary_csv(std::istream& in, ColumnChoice columns) {
  IngestedTrajectory traj;
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    ++lineno;
    const auto text = trim(line);
    if (text.empty()) continue;
    if (text[0] == '#') {
      parse_comment(text, traj.metadata);
      continue;
    }
    auto fields = split_commas(text);
    if (header.empty()) {
      header = std::move(fields);
      continue;
    }
    if (fields.size() != header.size())
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected " + std::to_string(header.size()) +
                                  " fields, got " + std::to_string(fields.size()));
    rows.push_back(std::move(fields));
  }
  if (header.empty()) throw std::invalid_argument("no CSV header found");

  auto column = [&](const char* name) -> std::optional<std::size_t> {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) return std::nullopt;
    return static_cast<std::size_t>(it - header.begin());
  };
  const auto s1_lat = column("s1"), s2_lat = column("s2");
  const auto s1_obs = column("s1_obs"), s2_obs = column("s2_obs");
  const bool obs_filled = s1_obs && s2_obs && !rows.empty() &&
                          std::all_of(rows.begin(), rows.end(), [&](const auto& r) { return !r[*s1_obs].empty(); });

  bool use_obs = false;
  switch (columns) {
  case ColumnChoice::Auto: use_obs = obs_filled; break;
  case ColumnChoice::Observed:
    if (!obs_filled) throw std::invalid_argument("observed columns requested but absent or empty");
    use_obs = true;
    break;
  case ColumnChoice::Latent: break;
  }
  const auto c1 = use_obs ? s1_obs : s1_lat;
  const auto c2 = use_obs ? s2_obs : s2_lat;
  if (!c1 || !c2) throw std::invalid_argument("CSV needs s1 and s2 columns");

  for (std::size_t r = 0; r < rows.size(); ++r) {
    traj.s1.push_back(parse_count(rows[r][*c1], r + 1));
    traj.s2.push_back(parse_count(rows[r][*c2], r + 1));
  }
  traj.from_observed_columns = use_obs;
  apply_n(traj);
  return traj;
}

IngestedTrajectory read_edge_blocks(std::istream& in, std::optional<std::uint32_t> n) {
  IngestedTrajectory traj;
  traj.n = n;
  std::vector<std::vector<Edge>> blocks;
  std::vector<Edge> current;
  std::string line;
  std::size_t lineno = 0;
  bool pending = false; // current block has content not yet closed
  while (std::getline(in, line)) {
    ++lineno;
    const auto text = trim(line);
    if (!text.empty() && text[0] == '#') {
      parse_comment(text, traj.metadata);
      continue;
    }
    if (text.empty()) {
      blocks.push_back(std::move(current));
      current.clear();
      pending = false;
      continue;
    }
    std::istringstream one(text + "\n");
    try {
      auto edges = read_edge_list(one);
      current.insert(current.end(), edges.begin(), edges.end());
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": malformed edge '" + text + "'");
    }
    pending = true;
  }
  if (pending) blocks.push_back(std::move(current));

  apply_n(traj);
  if (!traj.n) throw std::invalid_argument("vertex count unknown: give n or a '# n=' line");
  if (blocks.empty()) throw std::invalid_argument("no edge blocks found");
  for (const auto& block : blocks) {
    for (const auto& e : block)
      if (e.hi >= *traj.n) throw std::invalid_argument("edge endpoint " + std::to_string(e.hi) + " >= n");
    auto sorted = block;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("duplicate edge inside a block");
    const auto summary = summarize_edges(*traj.n, block);
    traj.s1.push_back(static_cast<std::uint32_t>(summary.s1));
    traj.s2.push_back(static_cast<std::uint32_t>(summary.s2));
  }
  return traj;
}

IngestedTrajectory read_trajectory(std::istream& in, std::optional<std::uint32_t> n, ColumnChoice columns) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string content = buffer.str();
  std::istringstream scan(content);
  std::string line;
  bool csv = false, any = false;
  while (std::getline(scan, line)) {
    const auto text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    any = true;
    csv = text.find(',') != std::string::npos;
    break;
  }
  if (!any) throw std::invalid_argument("trajectory file has no data");
  std::istringstream body(content);
  auto traj = csv ? read_summary_csv(body, columns) : read_edge_blocks(body, n);
  if (n) traj.n = n;
  return traj;
}

void write_statistic_csv(std::ostream& out, const StatisticSample& sample) {
  out << "# model=" << to_string(sample.model) << '\n';
  out << "# seed=" << sample.seed << '\n';
  out << "run_id,kind,value,censored\n";
  for (std::size_t i = 0; i < sample.values.size(); ++i)
    out << i << ',' << to_string(sample.kind) << ',' << format_number(sample.values[i]) << ','
        << (sample.censored[i] ? 1 : 0) << '\n';
}

void write_roc_csv(std::ostream& out, const RocCurve& curve) {
  out << "fpr,tpr\n";
  for (const auto& pt : curve.points) out << format_number(pt.fpr) << ',' << format_number(pt.tpr) << '\n';
}

void write_table_csv_header(std::ostream& out) { out << "table,from,to_0,to_1,row_sum,row_defined,row_stochastic\n"; }

void write_table_csv_rows(std::ostream& out, const closedform::TransitionTable& table) {
  const bool stochastic = table.row_stochastic();
  for (int r = 0; r < 2; ++r) {
    out << table.name << ',' << r << ',';
    if (table.row_defined[r])
      out << format_number(table.entry[r][0]) << ',' << format_number(table.entry[r][1]) << ','
          << format_number(table.row_sum(r)) << ",1,";
    else
      out << ",,,0,";
    out << (stochastic ? 1 : 0) << '\n';
  }
}

} // namespace noisyperc::io
