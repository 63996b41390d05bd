#pragma once

#include <stdexcept>
#include <string>

namespace recshard {

// Base for all recshard errors. Subclasses exist so callers can catch the
// failure class they care about; the message carries the specifics.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- model / data errors ---
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct BudgetTooSmall : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct ValidationError : Error {
  using Error::Error;
};

// --- planning errors ---
struct EmptySample : Error {
  using Error::Error;
};
struct InfeasibleCapacity : Error {
  using Error::Error;
};
struct PartitionRequired : Error {
  using Error::Error;
};

// --- wire / transport errors ---
struct FrameTooLarge : Error {
  using Error::Error;
};
struct MalformedFrame : Error {
  using Error::Error;
};
struct VersionMismatch : Error {
  using Error::Error;
};
struct RpcTimeout : Error {
  using Error::Error;
};
struct ShardUnavailable : Error {
  using Error::Error;
};
struct RemoteExecutionError : Error {
  using Error::Error;
};
struct UnknownPartition : Error {
  using Error::Error;
};

// --- replay / analysis errors ---
struct ProfileMismatch : Error {
  using Error::Error;
};
struct WorkloadMismatch : Error {
  using Error::Error;
};
struct MalformedTrace : Error {
  using Error::Error;
};
struct EmptyInput : Error {
  using Error::Error;
};

}  // namespace recshard
