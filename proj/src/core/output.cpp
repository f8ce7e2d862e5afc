#include "sosnet/output.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace sosnet::output {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v == 0.0 ? 0.0 : v);  // no "-0"
  return buf;
}

void write_timeseries(std::ostream& os, const RunResult& r) {
  os << kTimeseriesHeader << '\n';
  const auto proto = protocol_name(r.protocol);
  for (const Snapshot& s : r.snapshots) {
    os << s.tick << ',' << num(s.hour) << ',' << proto << ',' << r.seed << ','
       << num(s.participation_alive) << ',' << num(s.participation_connected) << ','
       << num(s.gini_alive) << ',' << num(s.mean_battery) << ',' << s.n_edges << ','
       << s.n_components << ',' << s.msgs_delivered << ',' << s.msgs_pending << ','
       << s.msgs_dropped << '\n';
  }
}

void write_betweenness(std::ostream& os, const RunResult& r) {
  os << kBetweennessHeader << '\n';
  for (const Snapshot& s : r.snapshots)
    for (std::size_t i = 0; i < s.betweenness.size(); ++i)
      os << s.tick << ',' << i << ',' << num(s.battery[i]) << ',' << num(s.betweenness[i]) << '\n';
}

namespace {

std::string_view status_name(traffic::Status s) {
  switch (s) {
    case traffic::Status::pending: return "pending";
    case traffic::Status::delivered: return "delivered";
    case traffic::Status::dropped: return "dropped";
  }
  return "?";
}

}  // namespace

void write_deliveries(std::ostream& os, const RunResult& r) {
  os << kDeliveriesHeader << '\n';
  for (const traffic::Message& m : r.messages) {
    os << m.id << ',' << m.src << ',' << m.dst << ',' << m.created_tick << ',';
    if (m.delivered_tick) os << *m.delivered_tick;
    os << ',' << m.hops << ',' << status_name(m.status) << '\n';
  }
}

void write_edges(std::ostream& os, const EdgeDump& dump) {
  os << kEdgesHeader << '\n';
  for (auto [a, b] : dump.edges) os << a << ',' << b << '\n';
}

void write_phase(std::ostream& os, std::span<const PhaseRow> rows) {
  os << kPhaseHeader << '\n';
  for (const PhaseRow& row : rows) {
    os << row.n_phones << ',' << num(row.density) << ',' << row.msgs_per_period << ',';
    if (row.seed)
      os << *row.seed;
    else
      os << "mean";
    os << ',' << num(row.longevity_mesh_h) << ',' << num(row.longevity_sos_h) << ','
       << num(row.diff_h) << '\n';
  }
}

namespace {

void refuse_existing(std::span<const std::filesystem::path> targets, bool force) {
  if (force) return;
  for (const auto& t : targets)
    if (std::filesystem::exists(t))
      throw std::runtime_error("refusing to overwrite " + t.string() + " (use --force)");
}

template <class Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  writer(out);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace

std::vector<std::filesystem::path> run_outputs(const std::filesystem::path& dir,
                                               const RunResult& r) {
  std::vector<std::filesystem::path> out{dir / "timeseries.csv", dir / "betweenness.csv",
                                         dir / "deliveries.csv"};
  for (const EdgeDump& d : r.edge_dumps)
    out.push_back(dir / ("edges_" + std::to_string(d.tick) + ".csv"));
  return out;
}

void write_run(const std::filesystem::path& dir, const RunResult& r, bool force) {
  const auto targets = run_outputs(dir, r);
  refuse_existing(targets, force);
  std::filesystem::create_directories(dir);
  write_file(targets[0], [&](std::ostream& os) { write_timeseries(os, r); });
  write_file(targets[1], [&](std::ostream& os) { write_betweenness(os, r); });
  write_file(targets[2], [&](std::ostream& os) { write_deliveries(os, r); });
  for (std::size_t i = 0; i < r.edge_dumps.size(); ++i)
    write_file(targets[3 + i], [&](std::ostream& os) { write_edges(os, r.edge_dumps[i]); });
}

void write_phase_file(const std::filesystem::path& dir, std::span<const PhaseRow> rows,
                      bool force) {
  const std::filesystem::path target = dir / "phase.csv";
  refuse_existing({&target, 1}, force);
  std::filesystem::create_directories(dir);
  write_file(target, [&](std::ostream& os) { write_phase(os, rows); });
}

}  // namespace sosnet::output
