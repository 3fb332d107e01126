#pragma once

// Structured one-line output records shared by the CLI subcommands: key:value
// or tab-separated rendering, integers printed exactly, reals as mid~radius,
// plus the FNV-1a digest and run manifest that make runs comparable.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "trib/ball.hpp"

namespace trib {

enum class RecordFormat { Kv, Tsv };

// "kv" or "tsv"; throws std::invalid_argument otherwise.
RecordFormat parse_record_format(const std::string& text);

// An ordered list of key/value fields; the first field is always
// record:<type>.  Integers are exact decimal strings; balls render as
// mid~radius; outward double bounds keep a _hi/_lo key suffix by convention.
class Record {
 public:
  explicit Record(const std::string& type);

  Record& put(const std::string& key, const std::string& value);
  Record& put(const std::string& key, const char* value);
  Record& put(const std::string& key, const mpz_class& value);
  Record& put(const std::string& key, long value);
  Record& put(const std::string& key, unsigned long long value);
  Record& put(const std::string& key, bool value);  // yes / no
  Record& put(const std::string& key, const Ball& value);
  Record& put_bound(const std::string& key, double value);

  std::string line(RecordFormat format) const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

// 64-bit FNV-1a over the emitted lines; identifies a record stream.
class StreamDigest {
 public:
  void feed(const std::string& line);
  std::string hex() const;

 private:
  std::uint64_t h_ = 14695981039346656037ULL;
};

// Serialized emission: one record per line, digest and count updated.
class RecordSink {
 public:
  RecordSink(std::ostream& out, RecordFormat format);
  void emit(const Record& rec);
  const StreamDigest& digest() const { return digest_; }
  unsigned long long count() const { return count_; }
  RecordFormat format() const { return format_; }

 private:
  std::ostream& out_;
  RecordFormat format_;
  StreamDigest digest_;
  unsigned long long count_ = 0;
};

struct RunManifest {
  std::string command_line;
  std::string params_echo;
  std::string version;
  std::string precision;
  double wall_ms = 0;  // outside the digest: the one legitimately varying field
  std::string digest;
  unsigned long long records = 0;
};

// Trailing manifest line, written around the digesting sink on purpose.
void write_manifest(std::ostream& out, RecordFormat format, const RunManifest& manifest);

}  // namespace trib
