#include "sosnet/traffic.hpp"

#include <algorithm>

#include "sosnet/rng.hpp"
#include "sosnet/sos.hpp"

namespace sosnet {

std::string_view protocol_name(Protocol p) { return p == Protocol::mesh ? "mesh" : "sos"; }

}  // namespace sosnet

namespace sosnet::traffic {

Traffic::Traffic(const WorldConfig& cfg, std::mt19937_64& offset_rng)
    : period_(cfg.msg_period_ticks), per_period_(cfg.msgs_per_period), offsets_(cfg.n_phones) {
  for (auto& o : offsets_) o = static_cast<std::uint32_t>(rng::uniform_below(offset_rng, period_));
}

std::vector<Message> Traffic::generate(std::uint32_t tick, const World& world,
                                       std::mt19937_64& rng) {
  std::vector<Message> fresh;
  if (per_period_ == 0) return fresh;
  const std::size_t n = world.size();
  for (PhoneId p = 0; p < n; ++p) {
    if (!world.alive(p) || tick % period_ != offsets_[p]) continue;
    for (std::uint32_t k = 0; k < per_period_; ++k) {
      // Uniform over the n - 1 other phones.
      auto d = static_cast<PhoneId>(rng::uniform_below(rng, n - 1));
      if (d >= p) ++d;
      Message m;
      m.id = next_id_++;
      m.src = p;
      m.dst = d;
      m.created_tick = tick;
      fresh.push_back(m);
    }
  }
  totals_.generated += fresh.size();
  pending_.insert(pending_.end(), fresh.begin(), fresh.end());
  return fresh;
}

std::optional<std::vector<PhoneId>> route(PhoneId src, PhoneId dst, const LinkGraph& graph,
                                          std::span<const Phone> phones) {
  if (!phones[src].alive || !phones[dst].alive) return std::nullopt;
  if (src == dst) return std::vector<PhoneId>{src};

  // Thread-local scratch keeps repeated BFS allocation-free.
  thread_local std::vector<PhoneId> parent;
  thread_local std::vector<PhoneId> touched;
  thread_local std::vector<PhoneId> queue;
  constexpr PhoneId kUnseen = UINT32_MAX;
  if (parent.size() < phones.size()) parent.assign(phones.size(), kUnseen);
  touched.clear();
  queue.clear();

  parent[src] = src;
  touched.push_back(src);
  queue.push_back(src);
  bool found = false;
  for (std::size_t i = 0; i < queue.size() && !found; ++i) {
    const PhoneId v = queue[i];
    for (PhoneId w : graph.neighbors(v)) {
      if (parent[w] != kUnseen || !phones[w].alive) continue;
      parent[w] = v;
      touched.push_back(w);
      if (w == dst) {
        found = true;
        break;
      }
      queue.push_back(w);
    }
  }

  std::optional<std::vector<PhoneId>> path;
  if (found) {
    path.emplace();
    for (PhoneId v = dst; v != src; v = parent[v]) path->push_back(v);
    path->push_back(src);
    std::reverse(path->begin(), path->end());
  }
  for (PhoneId v : touched) parent[v] = kUnseen;
  return path;
}

void deliver(Message& msg, std::span<const PhoneId> path, std::uint32_t tick, World& world) {
  // Every phone on the path is distinct, so each is charged at most once and
  // a phone dying mid-way never gets charged again.
  charge(world, path.front(), Action::send);
  for (std::size_t i = 1; i + 1 < path.size(); ++i) charge(world, path[i], Action::relay);
  charge(world, path.back(), Action::receive);
  msg.status = Status::delivered;
  msg.delivered_tick = tick;
  msg.hops = static_cast<std::uint32_t>(path.size() - 1);
}

std::vector<Message> Traffic::attempt_all(std::uint32_t tick, World& world, Protocol protocol) {
  std::vector<Message> finished;
  std::vector<Message> still;
  still.reserve(pending_.size());
  // pending_ is already in (created_tick, src, id) order: messages are only
  // ever appended in that order and removals keep relative order.
  for (Message& m : pending_) {
    if (!world.alive(m.dst) || !world.alive(m.src)) {
      m.status = Status::dropped;
      ++totals_.dropped;
      finished.push_back(m);
      continue;
    }
    auto path = route(m.src, m.dst, world.graph, world.phones);
    if (!path && protocol == Protocol::sos) {
      sos::reconfigure(world, m.src);
      ++totals_.reconfigurations;
      if (world.alive(m.src) && world.alive(m.dst))
        path = route(m.src, m.dst, world.graph, world.phones);
    }
    if (path) {
      deliver(m, *path, tick, world);
      ++totals_.delivered;
      totals_.hop_sum += m.hops;
      totals_.latency_sum += tick - m.created_tick;
      finished.push_back(m);
    } else {
      still.push_back(m);
    }
  }
  pending_.swap(still);
  return finished;
}

std::size_t Traffic::pending_for(PhoneId p) const {
  return static_cast<std::size_t>(
      std::count_if(pending_.begin(), pending_.end(), [p](const Message& m) { return m.src == p; }));
}

DeliveryReport Traffic::report() const {
  DeliveryReport r = totals_;
  r.pending = pending_.size();
  return r;
}

}  // namespace sosnet::traffic
