// Copyright 2026 The qrem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QREM_RECORDS_HPP
#define QREM_RECORDS_HPP

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace qrem {

inline constexpr std::string_view kVersion = "0.1.0";

using FieldValue = std::variant<std::int64_t, std::uint64_t, double, bool, std::string>;

/// One output row: ordered key/value pairs. Insertion order is the column
/// order, which keeps byte-identical output across runs.
class Record {
  public:
    Record& add(std::string key, std::uint64_t v) { return push(std::move(key), v); }
    Record& add(std::string key, std::int64_t v) { return push(std::move(key), v); }
    Record& add(std::string key, int v) { return push(std::move(key), static_cast<std::int64_t>(v)); }
    Record& add(std::string key, double v) { return push(std::move(key), v); }
    Record& add(std::string key, bool v) { return push(std::move(key), v); }
    Record& add(std::string key, std::string v) { return push(std::move(key), std::move(v)); }
    Record& add(std::string key, std::string_view v) { return push(std::move(key), std::string(v)); }
    Record& add(std::string key, const char* v) { return push(std::move(key), std::string(v)); }

    const std::vector<std::pair<std::string, FieldValue>>& fields() const { return fields_; }

  private:
    Record& push(std::string key, FieldValue v) {
        fields_.emplace_back(std::move(key), std::move(v));
        return *this;
    }

    std::vector<std::pair<std::string, FieldValue>> fields_;
};

enum class OutputFormat { kJsonl, kCsv };

OutputFormat parse_output_format(std::string_view name);

/// Serializes records to a data stream. The header record (version, seed,
/// config echo) goes through write_header exactly once, before any rows;
/// rows of one stream all carry the same keys.
class RecordWriter {
  public:
    virtual ~RecordWriter() = default;
    virtual void write_header(const Record& meta) = 0;
    virtual void write(const Record& row) = 0;
};

/// One JSON object per line; the header is a record tagged "header".
class JsonlWriter final : public RecordWriter {
  public:
    explicit JsonlWriter(std::ostream& out) : out_(out) {}
    void write_header(const Record& meta) override;
    void write(const Record& row) override;

  private:
    std::ostream& out_;
};

/// Comment header line, then a mandatory column-name row, then data rows.
/// Floats carry 17 significant digits so parsing them recovers the exact
/// value.
class CsvWriter final : public RecordWriter {
  public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}
    void write_header(const Record& meta) override;
    void write(const Record& row) override;

  private:
    std::ostream& out_;
    std::vector<std::string> columns_;
};

std::unique_ptr<RecordWriter> make_writer(OutputFormat format, std::ostream& out);

/// Locale-independent float form that round-trips exactly ("%.17g").
std::string format_double(double v);

}  // namespace qrem

#endif
