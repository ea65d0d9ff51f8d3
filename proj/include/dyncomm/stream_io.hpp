#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "dyncomm/graph.hpp"

namespace dyncomm {

/// One parsed line of a temporal edge list, labels still external.
struct TemporalEdgeRecord {
  std::string src_label;
  std::string dst_label;
  std::int64_t timestamp = 0;
  double weight = 1.0;
};

struct IngestResult {
  std::vector<TemporalEdgeRecord> records;  // in file order
  std::size_t dropped_self_loops = 0;
};

/// Reads a whitespace-separated edge list: "SRC DST [TIMESTAMP] [WEIGHT]".
/// Lines starting with '#' are comments; self-interactions are dropped and
/// counted; lines without a timestamp get the line number as one.
/// Transparently decompresses gzip files.
IngestResult ingest(const std::string& path);
IngestResult ingest_stream(std::istream& in);

enum class BinningStrategy {
  kEqualTimeWidth,
  kEqualEdgeCount,
};

struct BinningSpec {
  std::size_t num_bins = 1;
  BinningStrategy strategy = BinningStrategy::kEqualTimeWidth;
};

/// Deduplicated undirected edges with dense internal ids, ascending by
/// (timestamp, file order). Internal ids follow first appearance in that
/// order, so any contiguous binning introduces vertices contiguously.
struct NormalizedStream {
  struct Edge {
    VertexId u;
    VertexId v;
    double weight;
    std::int64_t timestamp;
  };
  std::vector<Edge> edges;
  std::vector<std::string> labels;  // internal id -> external label
  std::size_t dropped_duplicates = 0;
};

/// A ready-to-run growth stream plus the id map that produced it.
struct BinnedStream {
  std::vector<StepInput> steps;
  std::vector<std::string> labels;  // internal id -> external label
  std::size_t dropped_duplicates = 0;
  std::size_t dropped_self_loops = 0;
};

/// First-instance dedup (undirected key, earliest timestamp wins, ties by
/// file order) and dense id assignment.
NormalizedStream normalize(const std::vector<TemporalEdgeRecord>& records);

/// Splits a normalized stream into contiguous bins. Equal-time-width bins
/// partition [t_min, t_max + 1); equal-edge-count bins split the edge
/// sequence at floor(k*E/T).
std::vector<StepInput> bin(const NormalizedStream& normalized, const BinningSpec& spec);

BinnedStream normalize_and_bin(const std::vector<TemporalEdgeRecord>& records, const BinningSpec& spec);

/// One normalize, many binnings; returned in the order of `resolutions`.
std::vector<std::pair<std::size_t, BinnedStream>> resolution_sweep_prepare(
    const std::vector<TemporalEdgeRecord>& records, const std::vector<std::size_t>& resolutions);

/// Reads a directory of per-step edge lists named step_<k>.txt, one batch
/// per file in ascending k. Duplicate edges across steps are dropped with a
/// count (first instance wins).
BinnedStream read_step_directory(const std::string& dir);

/// Two-column "internal external" text for the id map artifact.
std::string id_map_text(const std::vector<std::string>& labels);

}  // namespace dyncomm
