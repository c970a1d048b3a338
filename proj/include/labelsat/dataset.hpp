// Copyright 2026 The labelsat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "labelsat/dense.hpp"
#include "labelsat/dimacs.hpp"
#include "labelsat/mix.hpp"
#include "labelsat/rng.hpp"

namespace labelsat {

struct DatasetRecord {
  DenseEncoding encoding;  // m x n
  Label label = Label::Sat;
  std::uint8_t option = 0;
  std::uint64_t seed = 0;    // not stored in the packed file
  std::uint64_t stream = 0;  // not stored in the packed file

  std::size_t n() const noexcept { return encoding.cols(); }
  std::size_t m() const noexcept { return encoding.rows(); }
};

inline DatasetRecord make_record(const MixSample& s, std::uint64_t seed, std::uint64_t stream) {
  return {to_dense(s.problem.cnf), s.problem.label, static_cast<std::uint8_t>(s.option), seed, stream};
}

namespace detail {

// Sample i is drawn from stream first_stream + i, so the output does not
// depend on the number of workers.
template <class Draw>
std::vector<MixSample> parallel_samples(std::uint64_t seed, std::size_t count, unsigned workers,
                                        std::uint64_t first_stream, const Draw& draw) {
  std::vector<MixSample> out(count);
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < count; i += workers) {
      RngState rng(seed, first_stream + i);
      out[i] = draw(rng);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  return out;
}

inline std::vector<DatasetRecord> to_records(const std::vector<MixSample>& samples, std::uint64_t seed,
                                             std::uint64_t first_stream) {
  std::vector<DatasetRecord> out;
  out.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) out.push_back(make_record(samples[i], seed, first_stream + i));
  return out;
}

}  // namespace detail

inline std::vector<MixSample> generate_samples(const GeneratorMixConfig& mix, std::uint64_t seed, std::size_t count,
                                               unsigned workers = 1, std::uint64_t first_stream = 0) {
  return detail::parallel_samples(seed, count, workers, first_stream,
                                  [&](RngState& rng) { return sample_problem(mix, rng); });
}

inline std::vector<DatasetRecord> generate_records(const GeneratorMixConfig& mix, std::uint64_t seed,
                                                   std::size_t count, unsigned workers = 1,
                                                   std::uint64_t first_stream = 0) {
  return detail::to_records(generate_samples(mix, seed, count, workers, first_stream), seed, first_stream);
}

// As generate_records with every problem at shape (n, m).
inline std::vector<DatasetRecord> generate_records_at(const GeneratorMixConfig& mix, Var n, std::size_t m,
                                                      std::uint64_t seed, std::size_t count, unsigned workers = 1,
                                                      std::uint64_t first_stream = 0) {
  const auto samples = detail::parallel_samples(seed, count, workers, first_stream,
                                                [&](RngState& rng) { return sample_problem_at(mix, n, m, rng); });
  return detail::to_records(samples, seed, first_stream);
}

// Regenerates one record from its coordinates.
inline DatasetRecord replay_record(const GeneratorMixConfig& mix, std::uint64_t seed, std::uint64_t stream) {
  RngState rng(seed, stream);
  return make_record(sample_problem(mix, rng), seed, stream);
}

struct BatchSpec {
  std::size_t batch_size = 64;
  std::size_t max_vars = 0;     // 0 = no cap
  std::size_t max_clauses = 0;  // 0 = no cap
  Orientation orientation = Orientation::Rows;
};

inline bool fits(const DatasetRecord& r, const BatchSpec& spec) {
  return (spec.max_vars == 0 || r.n() <= spec.max_vars) && (spec.max_clauses == 0 || r.m() <= spec.max_clauses);
}

// Zero-pads the columns out to spec.max_vars.
inline DenseEncoding pad_columns(const DenseEncoding& enc, const BatchSpec& spec) {
  if (spec.max_vars == 0) return enc;
  if (enc.cols() > spec.max_vars) throw ArgumentError("pad_columns: record wider than max_vars");
  if (spec.max_clauses != 0 && enc.rows() > spec.max_clauses)
    throw ArgumentError("pad_columns: record has more clauses than max_clauses");
  DenseEncoding out(enc.rows(), spec.max_vars);
  for (std::size_t i = 0; i < enc.rows(); ++i)
    for (std::size_t j = 0; j < enc.cols(); ++j) out.set(i, j, enc.at(i, j));
  return out;
}

// ---- packed binary format --------------------------------------------------
// "SATF", u32 version = 1, u32 record count, then per record:
// u32 n, u32 m, u8 label (0 UNSAT, 1 SAT), u8 option id, u16 reserved (0),
// m*n int8 cells row-major. All integers little-endian.

inline constexpr std::uint32_t kPackedVersion = 1;

namespace detail {

inline void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}
inline void put_u16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xFF));
  out.push_back(static_cast<char>(v >> 8));
}

class ByteReader {
 public:
  explicit ByteReader(std::string_view data) : data_(data) {}
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(data_[pos_ + i])) << (8 * i);
    pos_ += 4;
    return v;
  }
  std::uint16_t u16() {
    need(2);
    const auto v = static_cast<std::uint16_t>(static_cast<unsigned char>(data_[pos_]) |
                                              (static_cast<unsigned char>(data_[pos_ + 1]) << 8));
    pos_ += 2;
    return v;
  }
  std::uint8_t u8() {
    need(1);
    return static_cast<std::uint8_t>(data_[pos_++]);
  }
  std::string_view bytes(std::size_t n) {
    need(n);
    auto s = data_.substr(pos_, n);
    pos_ += n;
    return s;
  }
  bool done() const noexcept { return pos_ == data_.size(); }

 private:
  void need(std::size_t n) const {
    if (data_.size() - pos_ < n) throw FormatError("packed dataset: unexpected end of data");
  }
  std::string_view data_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline std::string encode_packed(const std::vector<DatasetRecord>& records) {
  std::size_t total = 12;
  for (const auto& r : records) total += 12 + r.n() * r.m();
  std::string out;
  out.reserve(total);
  out += "SATF";
  detail::put_u32(out, kPackedVersion);
  detail::put_u32(out, static_cast<std::uint32_t>(records.size()));
  for (const auto& r : records) {
    detail::put_u32(out, static_cast<std::uint32_t>(r.n()));
    detail::put_u32(out, static_cast<std::uint32_t>(r.m()));
    out.push_back(static_cast<char>(r.label == Label::Sat ? 1 : 0));
    out.push_back(static_cast<char>(r.option));
    detail::put_u16(out, 0);
    const auto cells = r.encoding.cells();
    out.append(reinterpret_cast<const char*>(cells.data()), cells.size());
  }
  return out;
}

inline std::vector<DatasetRecord> decode_packed(std::string_view data) {
  detail::ByteReader in(data);
  if (in.bytes(4) != "SATF") throw FormatError("packed dataset: bad magic");
  const auto version = in.u32();
  if (version != kPackedVersion) throw FormatError("packed dataset: unsupported version " + std::to_string(version));
  const auto count = in.u32();
  std::vector<DatasetRecord> out;
  out.reserve(count);
  for (std::uint32_t k = 0; k < count; ++k) {
    const auto n = in.u32();
    const auto m = in.u32();
    const auto label = in.u8();
    const auto option = in.u8();
    in.u16();
    if (label > 1) throw FormatError("packed dataset: record " + std::to_string(k) + " has invalid label");
    const auto raw = in.bytes(static_cast<std::size_t>(n) * m);
    std::vector<std::int8_t> cells(raw.size());
    std::memcpy(cells.data(), raw.data(), raw.size());
    out.push_back({DenseEncoding(m, n, std::move(cells)), label ? Label::Sat : Label::Unsat, option, 0, 0});
  }
  if (!in.done()) throw FormatError("packed dataset: trailing bytes after last record");
  return out;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

inline void write_packed(const std::filesystem::path& path, const std::vector<DatasetRecord>& records) {
  write_file(path, encode_packed(records));
}

inline std::vector<DatasetRecord> read_packed(const std::filesystem::path& path) {
  return decode_packed(read_file(path));
}

inline bool looks_packed(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  char magic[4] = {};
  return in.read(magic, 4) && std::memcmp(magic, "SATF", 4) == 0;
}

// ---- export ----------------------------------------------------------------

enum class ExportFormat { DimacsDir, Packed };

struct Manifest {
  std::string format;
  std::size_t records = 0;
  std::size_t skipped = 0;
  std::uint64_t seed = 0;
  std::uint64_t config_hash = 0;

  nlohmann::json to_json() const {
    char hash[17];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(config_hash));
    return {{"format", format}, {"records", records}, {"skipped", skipped}, {"seed", seed}, {"config_hash", hash}};
  }
};

struct LabelEntry {
  std::string filename;
  Label label = Label::Sat;
  std::size_t n = 0;
  std::size_t m = 0;
};

inline std::string record_filename(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%06zu.cnf", index);
  return buf;
}

inline std::filesystem::path manifest_path(const std::filesystem::path& path, ExportFormat format) {
  return format == ExportFormat::DimacsDir ? path / "manifest.json"
                                           : std::filesystem::path(path.string() + ".manifest.json");
}

// dimacs-dir: `path` is a directory receiving NNNNNN.cnf files, labels.tsv and
// manifest.json. packed: `path` is the dataset file; the manifest goes next to
// it as <path>.manifest.json. Records outside `caps` are skipped and counted.
inline Manifest export_dataset(const std::vector<DatasetRecord>& records, const std::filesystem::path& path,
                               ExportFormat format, const BatchSpec& caps = {}, std::uint64_t seed = 0,
                               std::uint64_t config_hash = 0) {
  Manifest manifest;
  manifest.format = format == ExportFormat::DimacsDir ? "dimacs-dir" : "packed";
  manifest.seed = seed;
  manifest.config_hash = config_hash;

  std::vector<const DatasetRecord*> kept;
  for (const auto& r : records) {
    if (fits(r, caps)) kept.push_back(&r);
    else ++manifest.skipped;
  }
  manifest.records = kept.size();

  if (format == ExportFormat::DimacsDir) {
    std::filesystem::create_directories(path);
    std::string labels;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      const auto name = record_filename(i);
      write_dimacs_file((path / name).string(), from_dense(kept[i]->encoding));
      labels += name + "\t" + to_string(kept[i]->label) + "\t" + std::to_string(kept[i]->n()) + "\t" +
                std::to_string(kept[i]->m()) + "\n";
    }
    write_file(path / "labels.tsv", labels);
  } else {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::vector<DatasetRecord> copy;
    copy.reserve(kept.size());
    for (const auto* r : kept) copy.push_back(*r);
    write_packed(path, copy);
  }
  write_file(manifest_path(path, format), manifest.to_json().dump(2) + "\n");
  return manifest;
}

inline std::vector<LabelEntry> read_labels(const std::filesystem::path& path) {
  std::vector<LabelEntry> out;
  std::istringstream in(read_file(path));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      const auto tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 4) throw FormatError(path.string() + ":" + std::to_string(line_no) + ": expected 4 fields");
    try {
      out.push_back({fields[0], label_from_string(fields[1]), std::stoul(fields[2]), std::stoul(fields[3])});
    } catch (const std::logic_error&) {
      throw FormatError(path.string() + ":" + std::to_string(line_no) + ": malformed entry");
    }
  }
  return out;
}

}  // namespace labelsat
