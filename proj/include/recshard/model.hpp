#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "recshard/errors.hpp"

namespace recshard {

enum class Pooling : uint8_t { kSum = 0, kConcat = 1 };
enum class Activation : uint8_t { kRelu = 0, kIdentity = 1 };
enum class NetRole : uint8_t { kUser = 0, kCandidate = 1 };

const char* to_string(Pooling p);
const char* to_string(Activation a);
const char* to_string(NetRole r);

// Learned sparse parameters: an N x M table of row vectors, looked up by
// index and collapsed with a pooling op.
struct EmbeddingTable {
  int32_t table_id = 0;
  int32_t net_id = 0;
  int64_t num_rows = 0;  // N
  int32_t dim = 0;       // M
  Pooling pooling = Pooling::kSum;
  std::vector<float> values;  // row-major, num_rows * dim

  int64_t size_bytes() const { return num_rows * static_cast<int64_t>(dim) * 4; }
  std::span<const float> row(int64_t r) const {
    return {values.data() + r * dim, static_cast<size_t>(dim)};
  }
};

struct DenseLayer {
  int32_t layer_id = 0;
  int32_t net_id = 0;
  int32_t in_dim = 0;
  int32_t out_dim = 0;
  Activation activation = Activation::kRelu;
  std::vector<float> weight;  // row-major, out_dim * in_dim
  std::vector<float> bias;    // out_dim

  int64_t size_bytes() const {
    return (static_cast<int64_t>(weight.size()) + static_cast<int64_t>(bias.size())) * 4;
  }
};

// A sub-model executed as a unit. The user net runs once per batch on the
// request-level features; the candidate net, when present, runs over the
// batch's candidate items and consumes the user net's output vector at its
// interaction stage. Single-net models score candidates directly: the per
// item dense input is user_dense ++ candidate_dense and the request-level
// sparse features are broadcast to every item.
struct Net {
  int32_t net_id = 0;
  NetRole role = NetRole::kUser;
  int32_t dense_input_dim = 0;
  std::vector<int32_t> table_ids;  // pooled outputs concatenated in this order
  std::vector<int32_t> bottom_layers;
  std::vector<int32_t> interaction_layers;
  std::vector<int32_t> top_layers;
};

// Per-table planning statistics. est_pooling_factor is the expected number
// of lookups per inference item: per request for user-net tables, per
// candidate for candidate-net tables.
struct TableProfile {
  int32_t table_id = 0;
  double est_pooling_factor = 0.0;
  int64_t size_bytes = 0;
};

struct ModelSpec {
  std::string model_id;
  int32_t default_batch_size = 32;
  int32_t user_dense_dim = 0;
  int32_t candidate_dense_dim = 0;
  std::vector<Net> nets;
  std::vector<EmbeddingTable> tables;
  std::vector<DenseLayer> layers;
  std::vector<TableProfile> profiles;

  const Net* user_net() const;
  const Net* candidate_net() const;
  // The net whose top layer emits the per-candidate score: the candidate
  // net when present, otherwise the user net.
  const Net& scoring_net() const;
  const EmbeddingTable& table(int32_t table_id) const;
  const DenseLayer& layer(int32_t layer_id) const;
  const TableProfile* profile(int32_t table_id) const;

  int64_t sparse_bytes() const;
  int64_t dense_bytes() const;
  int64_t total_bytes() const { return sparse_bytes() + dense_bytes(); }

  // For concat-pooled tables the lookup count per item is pinned to the
  // profile's pooling factor so interaction dims stay static.
  int32_t concat_lookups(int32_t table_id) const;
  // Pooled output width contributed by a table to its net's interaction
  // input: dim for sum pooling, dim * fixed-K for concat.
  int32_t pooled_dim(int32_t table_id) const;
};

// Rows of a table held by one shard under row-modulus partitioning: global
// row r lives on partition r % partition_count at local row r / partition_count.
// partition_count == 1 is a whole, unsplit table.
struct TablePartitionData {
  int32_t table_id = 0;
  int32_t net_id = 0;
  uint32_t partition_index = 0;
  uint32_t partition_count = 1;
  int64_t global_rows = 0;  // rows of the full table
  int64_t local_rows = 0;
  int32_t dim = 0;
  Pooling pooling = Pooling::kSum;
  std::vector<float> values;  // row-major, local_rows * dim

  std::span<const float> row(int64_t local_r) const {
    return {values.data() + local_r * dim, static_cast<size_t>(dim)};
  }
};

int64_t partition_local_rows(int64_t global_rows, uint32_t partition_index,
                             uint32_t partition_count);
TablePartitionData make_whole_partition(const EmbeddingTable& t);
TablePartitionData extract_partition(const EmbeddingTable& t, uint32_t partition_index,
                                     uint32_t partition_count);

// Indexed lookup plus pooling over local rows. Sum pooling accumulates in
// the order the indices arrive; K == 0 with sum pooling yields a zero
// vector; concat yields dim * K floats.
std::vector<float> sls_pool(const TablePartitionData& part, std::span<const int64_t> local_indices);
std::vector<float> sls_pool(const EmbeddingTable& table, std::span<const int64_t> indices);

// activation(weight * input + bias)
std::vector<float> fc_forward(const DenseLayer& layer, std::span<const float> input);

struct ValidationIssue {
  std::string what;
};

// Structural validation of a model: referential integrity, dimension
// chains, interaction input widths, unique ids. Throws nothing; returns
// the list of violations (empty means valid).
std::vector<ValidationIssue> validate_model(const ModelSpec& spec);
// Same checks, throwing ValidationError with all findings joined.
void validate_model_or_throw(const ModelSpec& spec);

// Interaction input width of a net: bottom output + pooled table widths
// (+ the user net's output width for the candidate net).
int32_t interaction_input_dim(const ModelSpec& spec, const Net& net);

}  // namespace recshard
