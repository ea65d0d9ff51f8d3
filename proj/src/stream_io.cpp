#include "dyncomm/stream_io.hpp"

#include <zlib.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <map>
#include <sstream>
#include <string_view>
#include <unordered_map>

#include "dyncomm/errors.hpp"

namespace dyncomm {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    std::size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

std::int64_t parse_int(std::string_view token, std::size_t line_no) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw InputError("line " + std::to_string(line_no) + ": unparseable timestamp '" + std::string(token) + "'");
  }
  return value;
}

double parse_weight(std::string_view token, std::size_t line_no) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw InputError("line " + std::to_string(line_no) + ": unparseable weight '" + std::string(token) + "'");
  }
  if (!(value > 0.0)) {
    throw InputError("line " + std::to_string(line_no) + ": weight must be positive");
  }
  return value;
}

IngestResult parse_lines(std::istream& in, bool allow_empty) {
  IngestResult result;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    if (tokens.size() < 2 || tokens.size() > 4) {
      throw InputError("line " + std::to_string(line_no) + ": expected 'SRC DST [TIMESTAMP] [WEIGHT]'");
    }
    TemporalEdgeRecord rec;
    rec.src_label = std::string(tokens[0]);
    rec.dst_label = std::string(tokens[1]);
    rec.timestamp = tokens.size() >= 3 ? parse_int(tokens[2], line_no) : static_cast<std::int64_t>(line_no);
    rec.weight = tokens.size() == 4 ? parse_weight(tokens[3], line_no) : 1.0;
    if (rec.src_label == rec.dst_label) {
      ++result.dropped_self_loops;
      continue;
    }
    result.records.push_back(std::move(rec));
  }
  if (result.records.empty() && !allow_empty) throw InputError("empty input: no edge records found");
  return result;
}

std::string read_file_maybe_gz(const std::string& path) {
  // gzopen reads plain files unchanged, so one path covers both
  gzFile file = gzopen(path.c_str(), "rb");
  if (file == nullptr) throw InputError("cannot open input file: " + path);
  std::string content;
  char buffer[1 << 16];
  int got = 0;
  while ((got = gzread(file, buffer, sizeof(buffer))) > 0) {
    content.append(buffer, static_cast<std::size_t>(got));
  }
  const bool read_error = got < 0;
  gzclose(file);
  if (read_error) throw InputError("error while reading input file: " + path);
  return content;
}

}  // namespace

IngestResult ingest_stream(std::istream& in) { return parse_lines(in, false); }

IngestResult ingest(const std::string& path) {
  std::istringstream stream(read_file_maybe_gz(path));
  return parse_lines(stream, false);
}

NormalizedStream normalize(const std::vector<TemporalEdgeRecord>& records) {
  if (records.empty()) throw InputError("cannot normalize an empty record set");

  std::vector<std::size_t> order(records.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return records[a].timestamp < records[b].timestamp;
  });

  NormalizedStream out;
  std::unordered_map<std::string, VertexId> id_of;
  std::map<std::pair<std::string, std::string>, bool> seen;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = id_of.try_emplace(label, static_cast<VertexId>(out.labels.size()));
    if (inserted) out.labels.push_back(label);
    return it->second;
  };

  for (std::size_t idx : order) {
    const auto& rec = records[idx];
    auto key = std::minmax(rec.src_label, rec.dst_label);
    if (!seen.emplace(key, true).second) {
      ++out.dropped_duplicates;
      continue;
    }
    const VertexId u = intern(rec.src_label);
    const VertexId v = intern(rec.dst_label);
    out.edges.push_back({u, v, rec.weight, rec.timestamp});
  }
  return out;
}

std::vector<StepInput> bin(const NormalizedStream& normalized, const BinningSpec& spec) {
  if (spec.num_bins < 1) throw ConfigError("number of bins must be at least 1");
  const std::size_t count = normalized.edges.size();
  const std::int64_t bins = static_cast<std::int64_t>(spec.num_bins);

  std::vector<std::size_t> bin_of(count);
  if (spec.strategy == BinningStrategy::kEqualEdgeCount) {
    if (spec.num_bins > count) {
      throw InputError("equal-edge-count binning: " + std::to_string(spec.num_bins) + " bins exceed " +
                       std::to_string(count) + " distinct edges");
    }
    for (std::size_t e = 0; e < count; ++e) {
      bin_of[e] = static_cast<std::size_t>(static_cast<std::int64_t>(e) * bins / static_cast<std::int64_t>(count));
    }
  } else {
    const std::int64_t t_min = normalized.edges.front().timestamp;
    const std::int64_t t_max = normalized.edges.back().timestamp;
    if (t_min == t_max && spec.num_bins > 1) {
      throw InputError("equal-time-width binning degenerates: all timestamps equal");
    }
    const std::int64_t range = t_max - t_min + 1;
    for (std::size_t e = 0; e < count; ++e) {
      bin_of[e] = static_cast<std::size_t>((normalized.edges[e].timestamp - t_min) * bins / range);
    }
  }

  std::vector<StepInput> steps(spec.num_bins);
  std::vector<std::vector<UndirectedEdge>> edges_by_bin(spec.num_bins);
  VertexId introduced = 0;
  for (std::size_t e = 0; e < count; ++e) {
    const auto& edge = normalized.edges[e];
    edges_by_bin[bin_of[e]].push_back({edge.u, edge.v, edge.weight});
    const VertexId high = std::max(edge.u, edge.v) + 1;
    if (high > introduced) {
      steps[bin_of[e]].new_vertex_count += high - introduced;
      introduced = high;
    }
  }
  for (std::size_t b = 0; b < spec.num_bins; ++b) {
    steps[b].batch = DeltaBatch::from_edges(edges_by_bin[b]);
  }
  return steps;
}

BinnedStream normalize_and_bin(const std::vector<TemporalEdgeRecord>& records, const BinningSpec& spec) {
  NormalizedStream normalized = normalize(records);
  BinnedStream out;
  out.steps = bin(normalized, spec);
  out.labels = std::move(normalized.labels);
  out.dropped_duplicates = normalized.dropped_duplicates;
  return out;
}

std::vector<std::pair<std::size_t, BinnedStream>> resolution_sweep_prepare(
    const std::vector<TemporalEdgeRecord>& records, const std::vector<std::size_t>& resolutions) {
  NormalizedStream normalized = normalize(records);
  std::vector<std::pair<std::size_t, BinnedStream>> out;
  out.reserve(resolutions.size());
  for (std::size_t t : resolutions) {
    BinnedStream stream;
    stream.steps = bin(normalized, {t, BinningStrategy::kEqualTimeWidth});
    stream.labels = normalized.labels;
    stream.dropped_duplicates = normalized.dropped_duplicates;
    out.emplace_back(t, std::move(stream));
  }
  return out;
}

BinnedStream read_step_directory(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw InputError("not a directory: " + dir);

  std::vector<std::pair<long, fs::path>> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind("step_", 0) != 0 || entry.path().extension() != ".txt") continue;
    const std::string digits = name.substr(5, name.size() - 5 - 4);
    long k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) continue;
    files.emplace_back(k, entry.path());
  }
  if (files.empty()) throw InputError("no step_<k>.txt files in " + dir);
  std::sort(files.begin(), files.end());

  BinnedStream out;
  std::unordered_map<std::string, VertexId> id_of;
  std::map<std::pair<std::string, std::string>, bool> seen;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = id_of.try_emplace(label, static_cast<VertexId>(out.labels.size()));
    if (inserted) out.labels.push_back(label);
    return it->second;
  };

  VertexId introduced = 0;
  for (const auto& [k, path] : files) {
    std::istringstream stream(read_file_maybe_gz(path.string()));
    IngestResult parsed = parse_lines(stream, /*allow_empty=*/true);
    out.dropped_self_loops += parsed.dropped_self_loops;
    std::vector<UndirectedEdge> edges;
    for (const auto& rec : parsed.records) {
      auto key = std::minmax(rec.src_label, rec.dst_label);
      if (!seen.emplace(key, true).second) {
        ++out.dropped_duplicates;
        continue;
      }
      edges.push_back({intern(rec.src_label), intern(rec.dst_label), rec.weight});
    }
    StepInput step;
    step.batch = DeltaBatch::from_edges(edges);
    const VertexId total = static_cast<VertexId>(out.labels.size());
    step.new_vertex_count = total - introduced;
    introduced = total;
    out.steps.push_back(std::move(step));
  }
  return out;
}

std::string id_map_text(const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out += std::to_string(i);
    out += ' ';
    out += labels[i];
    out += '\n';
  }
  return out;
}

}  // namespace dyncomm
