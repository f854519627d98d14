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

#ifndef BOSONSIM_IO_H
#define BOSONSIM_IO_H

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bosonsim/linalg.h"
#include "bosonsim/sampling.h"
#include "bosonsim/sources.h"

namespace bosonsim {

/// Ordered "key: value" pairs written at the top of every output file.
using HeaderFields = std::vector<std::pair<std::string, std::string>>;

// Matrix files are JSON objects {"rows": R, "cols": C, "entries": [[re, im], ...]}
// with entries in row-major order. An optional "meta" object carries the
// header fields.
ComplexMatrix parse_matrix(std::string_view text);
ComplexMatrix read_matrix_file(const std::filesystem::path &path);
std::string format_matrix(const ComplexMatrix &m, const HeaderFields &header = {});
void write_matrix_file(const std::filesystem::path &path, const ComplexMatrix &m, const HeaderFields &header = {});

// Source configs are JSON. Either {"sources": [{...}, ...]} with one object
// per source, or {"count": k, "source": {...}} for k identical sources.
// Recognized keys: epsilon, eta_herald, eta_detect, indistinguishability,
// rep_rate. Missing keys keep their defaults.
std::vector<SourceParams> parse_source_config(std::string_view text);
std::vector<SourceParams> read_source_config(const std::filesystem::path &path);

// Sample logs are CSV with columns pulse_index, trigger_pattern,
// input_pattern, output_pattern, patterns in compact occupation form.
// Lines starting with '#' form the header block and are skipped on read.
std::string format_sample_log(const std::vector<SampleRecord> &records, const HeaderFields &header = {});
std::vector<SampleRecord> parse_sample_log(std::string_view text);
void write_sample_log(
    const std::filesystem::path &path, const std::vector<SampleRecord> &records, const HeaderFields &header = {});
std::vector<SampleRecord> read_sample_log(const std::filesystem::path &path);

/// "# key: value" lines.
std::string format_header_block(const HeaderFields &header);

std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, std::string_view text);

}  // namespace bosonsim

#endif
