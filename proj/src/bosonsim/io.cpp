// Copyright 2026 The bosonsim Authors
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

#include "bosonsim/io.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "bosonsim/errors.h"

namespace bosonsim {

namespace {

using nlohmann::ordered_json;

double finite_number(const ordered_json &v, const char *what) {
    if (!v.is_number()) {
        throw ParseError(std::string(what) + " must be a number");
    }
    double x = v.get<double>();
    if (!std::isfinite(x)) {
        throw ParseError(std::string(what) + " must be finite");
    }
    return x;
}

ordered_json parse_json(std::string_view text, const char *what) {
    try {
        return ordered_json::parse(text.begin(), text.end());
    } catch (const ordered_json::exception &e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

SourceParams source_from_json(const ordered_json &obj) {
    if (!obj.is_object()) {
        throw ParseError("source config: each source must be an object");
    }
    SourceParams p;
    for (const auto &[key, value] : obj.items()) {
        if (key == "epsilon") {
            p.epsilon = finite_number(value, "epsilon");
        } else if (key == "eta_herald") {
            p.eta_herald = finite_number(value, "eta_herald");
        } else if (key == "eta_detect") {
            p.eta_detect = finite_number(value, "eta_detect");
        } else if (key == "indistinguishability") {
            p.indistinguishability = finite_number(value, "indistinguishability");
        } else if (key == "rep_rate") {
            p.rep_rate = finite_number(value, "rep_rate");
        } else {
            throw ParseError("source config: unknown key '" + key + "'");
        }
    }
    p.validate();
    return p;
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::uint64_t parse_u64(const std::string &s, std::size_t line) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("sample log line " + std::to_string(line) + ": bad pulse index '" + s + "'");
    }
    try {
        return std::stoull(s);
    } catch (const std::out_of_range &) {
        throw ParseError("sample log line " + std::to_string(line) + ": pulse index out of range");
    }
}

ModeOccupation parse_pattern(const std::string &s, std::size_t line) {
    try {
        return ModeOccupation::parse(s);
    } catch (const ContractError &e) {
        throw ParseError("sample log line " + std::to_string(line) + ": " + e.what());
    }
}

}  // namespace

ComplexMatrix parse_matrix(std::string_view text) {
    auto doc = parse_json(text, "matrix file");
    if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") || !doc.contains("entries")) {
        throw ParseError("matrix file: expected an object with rows, cols and entries");
    }
    if (!doc["rows"].is_number_unsigned() || !doc["cols"].is_number_unsigned()) {
        throw ParseError("matrix file: rows and cols must be non-negative integers");
    }
    auto rows = doc["rows"].get<std::size_t>();
    auto cols = doc["cols"].get<std::size_t>();
    const auto &entries = doc["entries"];
    if (!entries.is_array()) {
        throw ParseError("matrix file: entries must be an array");
    }
    if (entries.size() != rows * cols) {
        throw ParseError(
            "matrix file: " + std::to_string(entries.size()) + " entries for a " + std::to_string(rows) + "x" +
            std::to_string(cols) + " matrix");
    }
    std::vector<Complex> values;
    values.reserve(entries.size());
    for (const auto &e : entries) {
        if (!e.is_array() || e.size() != 2) {
            throw ParseError("matrix file: every entry must be a [re, im] pair");
        }
        values.emplace_back(finite_number(e[0], "matrix entry"), finite_number(e[1], "matrix entry"));
    }
    return ComplexMatrix(rows, cols, std::move(values));
}

ComplexMatrix read_matrix_file(const std::filesystem::path &path) {
    return parse_matrix(read_text_file(path));
}

std::string format_matrix(const ComplexMatrix &m, const HeaderFields &header) {
    ordered_json doc;
    if (!header.empty()) {
        ordered_json meta = ordered_json::object();
        for (const auto &[k, v] : header) {
            meta[k] = v;
        }
        doc["meta"] = std::move(meta);
    }
    doc["rows"] = m.rows();
    doc["cols"] = m.cols();
    // The entries list is written by hand, one [re, im] pair per line.
    doc["entries"] = ordered_json::array();
    std::string text = doc.dump(1);
    auto pos = text.rfind("[]");
    std::string entries = "[";
    for (std::size_t i = 0; i < m.entries().size(); i++) {
        const auto &x = m.entries()[i];
        entries += i ? ",\n  " : "\n  ";
        entries += ordered_json::array({x.real(), x.imag()}).dump();
    }
    entries += m.entries().empty() ? "]" : "\n ]";
    text.replace(pos, 2, entries);
    return text + "\n";
}

void write_matrix_file(const std::filesystem::path &path, const ComplexMatrix &m, const HeaderFields &header) {
    write_text_file(path, format_matrix(m, header));
}

std::vector<SourceParams> parse_source_config(std::string_view text) {
    auto doc = parse_json(text, "source config");
    if (!doc.is_object()) {
        throw ParseError("source config: expected an object");
    }
    std::vector<SourceParams> out;
    if (doc.contains("sources")) {
        if (!doc["sources"].is_array()) {
            throw ParseError("source config: 'sources' must be an array");
        }
        for (const auto &s : doc["sources"]) {
            out.push_back(source_from_json(s));
        }
    } else if (doc.contains("count") && doc.contains("source")) {
        if (!doc["count"].is_number_unsigned()) {
            throw ParseError("source config: 'count' must be a non-negative integer");
        }
        out.assign(doc["count"].get<std::size_t>(), source_from_json(doc["source"]));
    } else {
        throw ParseError("source config: expected 'sources' or 'count' + 'source'");
    }
    if (out.empty()) {
        throw ParseError("source config: no sources");
    }
    return out;
}

std::vector<SourceParams> read_source_config(const std::filesystem::path &path) {
    return parse_source_config(read_text_file(path));
}

std::string format_header_block(const HeaderFields &header) {
    std::string out;
    for (const auto &[k, v] : header) {
        out += "# " + k + ": " + v + "\n";
    }
    return out;
}

std::string format_sample_log(const std::vector<SampleRecord> &records, const HeaderFields &header) {
    std::string out = format_header_block(header);
    out += "pulse_index,trigger_pattern,input_pattern,output_pattern\n";
    for (const auto &r : records) {
        out += std::to_string(r.pulse_index);
        out += ',';
        out += r.trigger_pattern.str();
        out += ',';
        out += r.input_pattern.str();
        out += ',';
        out += r.output_pattern.str();
        out += '\n';
    }
    return out;
}

std::vector<SampleRecord> parse_sample_log(std::string_view text) {
    std::vector<SampleRecord> records;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool seen_columns = false;
    while (std::getline(in, line)) {
        line_no++;
        auto t = trim(line);
        if (t.empty() || t.front() == '#') {
            continue;
        }
        if (!seen_columns) {
            if (t != "pulse_index,trigger_pattern,input_pattern,output_pattern") {
                throw ParseError("sample log: missing column header");
            }
            seen_columns = true;
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(t);
        std::string f;
        while (std::getline(ss, f, ',')) {
            fields.push_back(trim(f));
        }
        if (fields.size() != 4) {
            throw ParseError("sample log line " + std::to_string(line_no) + ": expected 4 fields");
        }
        SampleRecord r{
            parse_u64(fields[0], line_no),
            parse_pattern(fields[1], line_no),
            parse_pattern(fields[2], line_no),
            parse_pattern(fields[3], line_no)};
        if (r.input_pattern.modes() != r.output_pattern.modes()) {
            throw ParseError("sample log line " + std::to_string(line_no) + ": input and output mode counts differ");
        }
        records.push_back(std::move(r));
    }
    if (!seen_columns) {
        throw ParseError("sample log: missing column header");
    }
    return records;
}

void write_sample_log(
    const std::filesystem::path &path, const std::vector<SampleRecord> &records, const HeaderFields &header) {
    write_text_file(path, format_sample_log(records, header));
}

std::vector<SampleRecord> read_sample_log(const std::filesystem::path &path) {
    return parse_sample_log(read_text_file(path));
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path &path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

}  // namespace bosonsim
