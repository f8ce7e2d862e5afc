#include "sosnet/world.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sosnet {

void WorldConfig::validate() const {
  auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
  if (!(width > 0.0) || !std::isfinite(width)) fail("width must be > 0");
  if (!(height > 0.0) || !std::isfinite(height)) fail("height must be > 0");
  if (!(tx_range > 0.0)) fail("tx_range must be > 0");
  if (!(tx_range < std::min(width, height) / 2.0))
    fail("tx_range must be below half the smaller world side");
  if (n_phones < 2) fail("n_phones must be >= 2");
  if (!(speed >= 0.0) || !std::isfinite(speed)) fail("speed must be >= 0");
  if (!(tick_minutes > 0.0)) fail("tick_minutes must be > 0");
  if (msg_period_ticks == 0) fail("msg_period_ticks must be >= 1");
}

namespace {

double wrap_coord(double v, double extent) {
  double r = std::fmod(v, extent);
  if (r < 0.0) r += extent;
  // fmod of a tiny negative can round up to exactly `extent`
  if (r >= extent) r = 0.0;
  return r;
}

double axis_delta(double a, double b, double extent) {
  double d = std::fabs(a - b);
  return std::min(d, extent - d);
}

}  // namespace

Position wrap(Position p, const WorldConfig& cfg) {
  return {wrap_coord(p.x, cfg.width), wrap_coord(p.y, cfg.height)};
}

double torus_distance_sq(Position a, Position b, const WorldConfig& cfg) {
  const double dx = axis_delta(a.x, b.x, cfg.width);
  const double dy = axis_delta(a.y, b.y, cfg.height);
  return dx * dx + dy * dy;
}

double torus_distance(Position a, Position b, const WorldConfig& cfg) {
  return std::sqrt(torus_distance_sq(a, b, cfg));
}

// --- LinkGraph ---------------------------------------------------------------

bool LinkGraph::has_edge(PhoneId a, PhoneId b) const {
  const auto& n = adj_[a];
  return std::binary_search(n.begin(), n.end(), b);
}

bool LinkGraph::add_edge(PhoneId a, PhoneId b) {
  if (a == b) throw InvariantViolation("self-loop on phone " + std::to_string(a));
  auto& na = adj_[a];
  auto it = std::lower_bound(na.begin(), na.end(), b);
  if (it != na.end() && *it == b) return false;
  na.insert(it, b);
  auto& nb = adj_[b];
  nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
  ++edges_;
  return true;
}

bool LinkGraph::remove_edge(PhoneId a, PhoneId b) {
  auto& na = adj_[a];
  auto it = std::lower_bound(na.begin(), na.end(), b);
  if (it == na.end() || *it != b) return false;
  na.erase(it);
  auto& nb = adj_[b];
  nb.erase(std::lower_bound(nb.begin(), nb.end(), a));
  --edges_;
  return true;
}

std::vector<PhoneId> LinkGraph::isolate(PhoneId p) {
  std::vector<PhoneId> former;
  former.swap(adj_[p]);
  for (PhoneId q : former) {
    auto& nq = adj_[q];
    nq.erase(std::lower_bound(nq.begin(), nq.end(), p));
  }
  edges_ -= former.size();
  return former;
}

std::vector<std::pair<PhoneId, PhoneId>> LinkGraph::edges() const {
  std::vector<std::pair<PhoneId, PhoneId>> out;
  out.reserve(edges_);
  for (PhoneId a = 0; a < adj_.size(); ++a)
    for (PhoneId b : adj_[a])
      if (a < b) out.emplace_back(a, b);
  return out;
}

// --- SpatialGrid -------------------------------------------------------------

void SpatialGrid::rebuild(std::span<const Phone> phones, const WorldConfig& cfg) {
  cols_ = static_cast<std::size_t>(std::floor(cfg.width / cfg.tx_range));
  rows_ = static_cast<std::size_t>(std::floor(cfg.height / cfg.tx_range));
  scan_ = cols_ < 3 || rows_ < 3;
  if (scan_) {
    cells_.clear();
    return;
  }
  cell_w_ = cfg.width / static_cast<double>(cols_);
  cell_h_ = cfg.height / static_cast<double>(rows_);
  cells_.assign(cols_ * rows_, {});
  for (const Phone& ph : phones)
    if (ph.alive) cells_[cell_of(ph.pos)].push_back(ph.id);
}

std::size_t SpatialGrid::cell_of(Position pos) const {
  auto cx = std::min(static_cast<std::size_t>(pos.x / cell_w_), cols_ - 1);
  auto cy = std::min(static_cast<std::size_t>(pos.y / cell_h_), rows_ - 1);
  return cy * cols_ + cx;
}

void SpatialGrid::query(PhoneId p, std::span<const Phone> phones, const WorldConfig& cfg,
                        std::vector<PhoneId>& out) const {
  out.clear();
  const Position at = phones[p].pos;
  const double r2 = cfg.tx_range * cfg.tx_range;
  if (scan_) {
    for (const Phone& q : phones)
      if (q.id != p && q.alive && torus_distance_sq(at, q.pos, cfg) <= r2) out.push_back(q.id);
    return;
  }
  const std::size_t c = cell_of(at);
  const std::size_t cx = c % cols_;
  const std::size_t cy = c / cols_;
  for (std::size_t dy = 0; dy < 3; ++dy) {
    const std::size_t y = (cy + rows_ + dy - 1) % rows_;
    for (std::size_t dx = 0; dx < 3; ++dx) {
      const std::size_t x = (cx + cols_ + dx - 1) % cols_;
      for (PhoneId q : cells_[y * cols_ + x]) {
        if (q == p || !phones[q].alive) continue;
        if (torus_distance_sq(at, phones[q].pos, cfg) <= r2) out.push_back(q);
      }
    }
  }
  std::sort(out.begin(), out.end());
}

// --- component labels --------------------------------------------------------

void relabel_components(std::span<Phone> phones, const LinkGraph& graph,
                        std::span<const PhoneId> seeds) {
  // Stamp-based visited marks; one allocation per call is fine at this scale.
  std::vector<char> seen(phones.size(), 0);
  std::vector<PhoneId> members;
  std::vector<PhoneId> queue;
  for (PhoneId s : seeds) {
    if (seen[s]) continue;
    members.clear();
    queue.assign(1, s);
    seen[s] = 1;
    PhoneId lowest = s;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const PhoneId v = queue[i];
      members.push_back(v);
      lowest = std::min(lowest, v);
      for (PhoneId w : graph.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    }
    for (PhoneId v : members) phones[v].network_id = lowest;
  }
}

std::vector<PhoneId> component_minima(const LinkGraph& graph) {
  const std::size_t n = graph.node_count();
  std::vector<PhoneId> label(n, std::numeric_limits<PhoneId>::max());
  std::vector<PhoneId> queue;
  // Ascending start ids: the first id reaching a component is its minimum.
  for (PhoneId s = 0; s < n; ++s) {
    if (label[s] != std::numeric_limits<PhoneId>::max()) continue;
    label[s] = s;
    queue.assign(1, s);
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (PhoneId w : graph.neighbors(queue[i]))
        if (label[w] == std::numeric_limits<PhoneId>::max()) {
          label[w] = s;
          queue.push_back(w);
        }
  }
  return label;
}

std::size_t count_components(const LinkGraph& graph, std::span<const Phone> phones) {
  const auto label = component_minima(graph);
  std::size_t count = 0;
  for (const Phone& p : phones)
    if (p.alive && label[p.id] == p.id) ++count;
  return count;
}

}  // namespace sosnet
