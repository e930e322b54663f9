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

#include "qrem/records.hpp"

#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace qrem {

namespace {

nlohmann::ordered_json to_json(const Record& record) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [key, value] : record.fields()) {
        std::visit([&](const auto& v) { j[key] = v; }, value);
    }
    return j;
}

std::string csv_escape(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) {
        return value;
    }
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string csv_value(const FieldValue& value) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::string>) {
                return csv_escape(v);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else if constexpr (std::is_same_v<T, double>) {
                return format_double(v);
            } else {
                return std::to_string(v);
            }
        },
        value);
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
    if (name == "jsonl") return OutputFormat::kJsonl;
    if (name == "csv") return OutputFormat::kCsv;
    throw std::invalid_argument("unknown output format: " + std::string(name));
}

std::string format_double(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

void JsonlWriter::write_header(const Record& meta) {
    nlohmann::ordered_json j;
    j["record"] = "header";
    const nlohmann::ordered_json extra = to_json(meta);
    for (const auto& [key, value] : extra.items()) {
        j[key] = value;
    }
    out_ << j.dump() << '\n';
}

void JsonlWriter::write(const Record& row) {
    out_ << to_json(row).dump() << '\n';
}

void CsvWriter::write_header(const Record& meta) {
    out_ << '#';
    for (const auto& [key, value] : meta.fields()) {
        out_ << ' ' << key << '=' << csv_value(value);
    }
    out_ << '\n';
}

void CsvWriter::write(const Record& row) {
    if (columns_.empty()) {
        std::string header;
        for (const auto& [key, value] : row.fields()) {
            columns_.push_back(key);
            if (!header.empty()) header += ',';
            header += csv_escape(key);
        }
        out_ << header << '\n';
    } else {
        if (row.fields().size() != columns_.size()) {
            throw std::logic_error("CsvWriter: row shape changed mid-stream");
        }
        for (std::size_t i = 0; i < columns_.size(); ++i) {
            if (row.fields()[i].first != columns_[i]) {
                throw std::logic_error("CsvWriter: row keys changed mid-stream");
            }
        }
    }
    std::string line;
    for (const auto& [key, value] : row.fields()) {
        if (!line.empty()) line += ',';
        line += csv_value(value);
    }
    out_ << line << '\n';
}

std::unique_ptr<RecordWriter> make_writer(OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::kCsv) {
        return std::make_unique<CsvWriter>(out);
    }
    return std::make_unique<JsonlWriter>(out);
}

}  // namespace qrem
