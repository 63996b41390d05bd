#pragma once

#include <cstdint>
#include <string>

namespace recshard {

// 128-bit trace identifier, propagated across shards on every frame.
struct TraceId {
  uint64_t hi = 0;
  uint64_t lo = 0;

  bool operator==(const TraceId&) const = default;
  bool is_zero() const { return hi == 0 && lo == 0; }
};

struct TraceIdHash {
  size_t operator()(const TraceId& t) const {
    return static_cast<size_t>(t.hi ^ (t.lo * 0x9e3779b97f4a7c15ULL));
  }
};

std::string to_hex(uint64_t v);
std::string to_hex(const TraceId& t);
uint64_t parse_hex64(const std::string& s);
TraceId parse_hex128(const std::string& s);

// splitmix64; used to derive well-mixed ids from counters and seeds.
uint64_t mix64(uint64_t x);

// FNV-1a over a byte string. Used for provenance hashes (plan files etc.).
uint64_t fnv1a(const void* data, size_t len);
uint64_t fnv1a(const std::string& s);

// Process-unique 64-bit id generator (random base + atomic counter).
uint64_t next_span_id();

// Fresh 128-bit trace id (non-deterministic; clients may instead derive
// their own from a seed).
TraceId new_trace_id();

// Host-local monotonic timestamp in nanoseconds.
int64_t mono_now_ns();
// Wall clock (realtime) in nanoseconds; only recorded as a file anchor.
int64_t wall_now_ns();
// Calling thread's consumed CPU time in nanoseconds.
int64_t thread_cpu_now_ns();

}  // namespace recshard
