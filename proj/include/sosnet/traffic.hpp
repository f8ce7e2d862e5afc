#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "sosnet/state.hpp"

namespace sosnet {

enum class Protocol : std::uint8_t { mesh, sos };

std::string_view protocol_name(Protocol p);

}  // namespace sosnet

namespace sosnet::traffic {

enum class Status : std::uint8_t { pending, delivered, dropped };

struct Message {
  std::uint64_t id = 0;
  PhoneId src = 0;
  PhoneId dst = 0;
  std::uint32_t created_tick = 0;
  std::optional<std::uint32_t> delivered_tick;
  std::uint32_t hops = 0;
  Status status = Status::pending;
};

struct DeliveryReport {
  std::uint64_t generated = 0;
  std::uint64_t delivered = 0;
  std::uint64_t dropped = 0;
  std::uint64_t reconfigurations = 0;
  std::uint64_t hop_sum = 0;
  std::uint64_t latency_sum = 0;  // ticks
  std::uint64_t pending = 0;      // at report time

  double mean_hops() const { return delivered ? double(hop_sum) / double(delivered) : 0.0; }
  double mean_latency() const {
    return delivered ? double(latency_sum) / double(delivered) : 0.0;
  }
};

/// Message generation schedule plus the ordered queue of undelivered mail.
class Traffic {
 public:
  /// Draws one stagger offset per phone in [0, msg_period_ticks).
  Traffic(const WorldConfig& cfg, std::mt19937_64& offset_rng);

  /// New messages for `tick`: every alive phone whose stagger matches sends
  /// msgs_per_period messages to uniformly chosen other phones (any of the
  /// initial population, dead or alive). Appended to the pending queue in
  /// ascending src order.
  std::vector<Message> generate(std::uint32_t tick, const World& world, std::mt19937_64& rng);

  /// Route every queued message in (created_tick, src) order. Under SOS a
  /// routing failure triggers one reconfiguration at the source and one
  /// retry; messages addressed to dead phones (or from dead phones) drop.
  /// Returns the messages that reached a final state this tick.
  std::vector<Message> attempt_all(std::uint32_t tick, World& world, Protocol protocol);

  std::span<const std::uint32_t> offsets() const { return offsets_; }
  std::span<const Message> pending() const { return pending_; }
  std::size_t pending_for(PhoneId p) const;
  DeliveryReport report() const;

 private:
  std::uint32_t period_;
  std::uint32_t per_period_;
  std::vector<std::uint32_t> offsets_;
  std::vector<Message> pending_;
  std::uint64_t next_id_ = 0;
  DeliveryReport totals_;
};

/// Breadth-first shortest path over alive phones, neighbors expanded in
/// ascending id. Returns the phone sequence src..dst, or nothing when dst is
/// unreachable or dead.
std::optional<std::vector<PhoneId>> route(PhoneId src, PhoneId dst, const LinkGraph& graph,
                                          std::span<const Phone> phones);

/// Charge send/relay/receive along `path` and mark msg delivered. Phones that
/// die while paying still complete the delivery.
void deliver(Message& msg, std::span<const PhoneId> path, std::uint32_t tick, World& world);

}  // namespace sosnet::traffic
