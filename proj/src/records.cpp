#include "trib/records.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace trib {

RecordFormat parse_record_format(const std::string& text) {
  if (text == "kv") return RecordFormat::Kv;
  if (text == "tsv") return RecordFormat::Tsv;
  throw std::invalid_argument("unknown record format '" + text + "' (want kv or tsv)");
}

namespace {

std::string format_double(const char* fmt, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, x);
  return buf;
}

}  // namespace

Record::Record(const std::string& type) { put("record", type); }

Record& Record::put(const std::string& key, const std::string& value) {
  fields_.emplace_back(key, value);
  return *this;
}

Record& Record::put(const std::string& key, const char* value) {
  return put(key, std::string(value));
}

Record& Record::put(const std::string& key, const mpz_class& value) {
  return put(key, value.get_str());
}

Record& Record::put(const std::string& key, long value) {
  return put(key, std::to_string(value));
}

Record& Record::put(const std::string& key, unsigned long long value) {
  return put(key, std::to_string(value));
}

Record& Record::put(const std::string& key, bool value) {
  return put(key, value ? "yes" : "no");
}

Record& Record::put(const std::string& key, const Ball& value) {
  return put(key, format_double("%.17g", value.mid) + "~" + format_double("%.3g", value.rad));
}

Record& Record::put_bound(const std::string& key, double value) {
  return put(key, format_double("%.10g", value));
}

std::string Record::line(RecordFormat format) const {
  std::string out;
  for (const auto& [key, value] : fields_) {
    if (!out.empty()) out += (format == RecordFormat::Kv) ? ' ' : '\t';
    if (format == RecordFormat::Kv) {
      out += key;
      out += ':';
    }
    out += value;
  }
  return out;
}

void StreamDigest::feed(const std::string& line) {
  for (unsigned char ch : line) {
    h_ ^= ch;
    h_ *= 1099511628211ULL;
  }
  h_ ^= '\n';
  h_ *= 1099511628211ULL;
}

std::string StreamDigest::hex() const {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h_));
  return buf;
}

RecordSink::RecordSink(std::ostream& out, RecordFormat format) : out_(out), format_(format) {}

void RecordSink::emit(const Record& rec) {
  std::string line = rec.line(format_);
  digest_.feed(line);
  ++count_;
  out_ << line << '\n';
}

void write_manifest(std::ostream& out, RecordFormat format, const RunManifest& manifest) {
  Record rec("manifest");
  // command last: it is the one value that may contain spaces, so a kv line
  // stays splittable up to it.
  rec.put("version", manifest.version)
      .put("precision", manifest.precision)
      .put("params", manifest.params_echo)
      .put("records", manifest.records)
      .put("digest", manifest.digest)
      .put("wall_ms", format_double("%.1f", manifest.wall_ms))
      .put("command", manifest.command_line);
  out << rec.line(format) << '\n';
}

}  // namespace trib
