#pragma once

// CSV writers. Fixed headers, '%.6g' numbers, LF line endings.

#include <filesystem>
#include <ostream>
#include <span>
#include <string>

#include "sosnet/engine.hpp"
#include "sosnet/sweep.hpp"

namespace sosnet::output {

inline constexpr const char* kTimeseriesHeader =
    "tick,hour,protocol,seed,participation_alive,participation_connected,gini_alive,"
    "mean_battery,n_edges,n_components,msgs_delivered,msgs_pending,msgs_dropped";
inline constexpr const char* kBetweennessHeader = "tick,phone_id,battery,betweenness";
inline constexpr const char* kDeliveriesHeader =
    "msg_id,src,dst,created_tick,delivered_tick,hops,status";
inline constexpr const char* kEdgesHeader = "phone_a,phone_b";
inline constexpr const char* kPhaseHeader =
    "n_phones,density,msgs_per_period,seed,longevity_mesh_h,longevity_sos_h,diff_h";

std::string num(double v);

void write_timeseries(std::ostream& os, const RunResult& r);
void write_betweenness(std::ostream& os, const RunResult& r);
void write_deliveries(std::ostream& os, const RunResult& r);
void write_edges(std::ostream& os, const EdgeDump& dump);
void write_phase(std::ostream& os, std::span<const PhaseRow> rows);

/// Files a run would create in `dir` (edge dumps included).
std::vector<std::filesystem::path> run_outputs(const std::filesystem::path& dir,
                                               const RunResult& r);

/// Writes timeseries/betweenness/deliveries (+ edges_<tick>.csv) into dir.
/// Refuses with std::runtime_error if any target exists and !force.
void write_run(const std::filesystem::path& dir, const RunResult& r, bool force);

void write_phase_file(const std::filesystem::path& dir, std::span<const PhaseRow> rows,
                      bool force);

}  // namespace sosnet::output
