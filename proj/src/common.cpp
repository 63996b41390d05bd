#include "recshard/common.hpp"

#include <atomic>
#include <cstdio>
#include <ctime>
#include <random>
#include <stdexcept>

namespace recshard {

std::string to_hex(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return std::string(buf);
}

std::string to_hex(const TraceId& t) { return to_hex(t.hi) + to_hex(t.lo); }

uint64_t parse_hex64(const std::string& s) {
  if (s.empty() || s.size() > 16) throw std::invalid_argument("bad hex64: " + s);
  uint64_t v = 0;
  for (char c : s) {
    v <<= 4;
    if (c >= '0' && c <= '9')
      v |= static_cast<uint64_t>(c - '0');
    else if (c >= 'a' && c <= 'f')
      v |= static_cast<uint64_t>(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F')
      v |= static_cast<uint64_t>(c - 'A' + 10);
    else
      throw std::invalid_argument("bad hex64: " + s);
  }
  return v;
}

TraceId parse_hex128(const std::string& s) {
  if (s.size() != 32) throw std::invalid_argument("bad hex128: " + s);
  return TraceId{parse_hex64(s.substr(0, 16)), parse_hex64(s.substr(16))};
}

uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t fnv1a(const void* data, size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  uint64_t h = 0xcbf29ce484222325ULL;
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

uint64_t fnv1a(const std::string& s) { return fnv1a(s.data(), s.size()); }

namespace {
uint64_t process_seed() {
  static const uint64_t seed = [] {
    std::random_device rd;
    uint64_t s = (static_cast<uint64_t>(rd()) << 32) ^ rd();
    return mix64(s ^ static_cast<uint64_t>(wall_now_ns()));
  }();
  return seed;
}
}  // namespace

uint64_t next_span_id() {
  static std::atomic<uint64_t> counter{1};
  uint64_t id = 0;
  while (id == 0) id = mix64(process_seed() ^ counter.fetch_add(1, std::memory_order_relaxed));
  return id;
}

TraceId new_trace_id() {
  TraceId t;
  t.hi = next_span_id();
  t.lo = next_span_id();
  return t;
}

namespace {
int64_t clock_ns(clockid_t id) {
  timespec ts{};
  clock_gettime(id, &ts);
  return static_cast<int64_t>(ts.tv_sec) * 1000000000LL + ts.tv_nsec;
}
}  // namespace

int64_t mono_now_ns() { return clock_ns(CLOCK_MONOTONIC); }
int64_t wall_now_ns() { return clock_ns(CLOCK_REALTIME); }
int64_t thread_cpu_now_ns() { return clock_ns(CLOCK_THREAD_CPUTIME_ID); }

}  // namespace recshard
