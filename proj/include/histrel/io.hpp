#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "histrel/hist_core.hpp"

namespace histrel {

using json = nlohmann::json;

/// Comma-separated labels, e.g. "a,b,c".
Alphabet parse_alphabet_list(std::string_view text);

/// One sample per line, comma-separated single-token symbols, no quoting;
/// LF or CRLF line ends, blank lines ignored. Without an explicit alphabet
/// the distinct labels are sorted by byte value. Every row must have the
/// first row's length.
HistogramSet parse_samples_csv(std::string_view text, const std::optional<Alphabet>& alphabet = std::nullopt);

/// {"alphabet": [...], "sample_length": N, "histograms": [[...], ...]}
HistogramSet histogram_set_from_json(const json& doc);
json to_json(const HistogramSet& set);

/// Reads CSV samples or a JSON histogram file (detected by a ".json"
/// extension or a leading '{'). When `alphabet` is given, a JSON file must
/// declare the same alphabet.
HistogramSet ingest_samples(const std::filesystem::path& path,
                            const std::optional<Alphabet>& alphabet = std::nullopt);
HistogramSet ingest_text(std::string_view text, bool is_json,
                         const std::optional<Alphabet>& alphabet = std::nullopt);

std::string read_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file, then renames over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

std::string sha256_hex(std::string_view bytes);

}  // namespace histrel
