#include "histrel/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <openssl/evp.h>

namespace histrel {
namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto at = s.find(sep);
    out.push_back(s.substr(0, at));
    if (at == std::string_view::npos) return out;
    s.remove_prefix(at + 1);
  }
}

struct Row {
  std::size_t line;
  std::vector<std::string> tokens;
};

}  // namespace

Alphabet parse_alphabet_list(std::string_view text) {
  std::vector<std::string> labels;
  for (auto token : split(text, ',')) {
    token = trim(token);
    if (token.empty()) throw ParseError(0, "empty label in alphabet list");
    labels.emplace_back(token);
  }
  return Alphabet(std::move(labels));
}

HistogramSet parse_samples_csv(std::string_view text, const std::optional<Alphabet>& alphabet) {
  std::vector<Row> rows;
  std::size_t line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    Row row{line_no, {}};
    std::size_t position = 0;
    for (auto token : split(line, ',')) {
      ++position;
      token = trim(token);
      if (token.empty()) throw ParseError(line_no, "empty symbol at position " + std::to_string(position));
      row.tokens.emplace_back(token);
    }
    if (!rows.empty() && row.tokens.size() != rows.front().tokens.size())
      throw LengthMismatch(line_no, rows.front().tokens.size(), row.tokens.size());
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorCode::empty_set, "no samples in input");

  Alphabet resolved = [&] {
    if (alphabet) return *alphabet;
    std::set<std::string> labels;
    for (const auto& r : rows) labels.insert(r.tokens.begin(), r.tokens.end());
    return Alphabet(std::vector<std::string>(labels.begin(), labels.end()));
  }();

  std::vector<Histogram> members;
  members.reserve(rows.size());
  for (const auto& r : rows) {
    try {
      members.push_back(build_histogram(r.tokens, resolved));
    } catch (const UnknownSymbol& e) {
      throw UnknownSymbol(r.line, e.position(), e.label());
    }
  }
  const auto length = static_cast<Count>(rows.front().tokens.size());
  return HistogramSet(std::move(resolved), length, std::move(members));
}

HistogramSet histogram_set_from_json(const json& doc) {
  try {
    if (!doc.is_object()) throw ParseError(0, "histogram file must be a JSON object");
    std::vector<std::string> labels = doc.at("alphabet").get<std::vector<std::string>>();
    const Count length = doc.at("sample_length").get<Count>();
    std::vector<Histogram> members;
    for (const auto& h : doc.at("histograms")) members.emplace_back(h.get<std::vector<Count>>());
    return HistogramSet(Alphabet(std::move(labels)), length, std::move(members));
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("malformed histogram JSON: ") + e.what());
  }
}

json to_json(const HistogramSet& set) {
  json hs = json::array();
  for (const auto& m : set.members()) hs.push_back(std::vector<Count>(m.counts().begin(), m.counts().end()));
  return json{{"alphabet", set.alphabet().symbols()}, {"sample_length", set.sample_length()}, {"histograms", hs}};
}

HistogramSet ingest_text(std::string_view text, bool is_json, const std::optional<Alphabet>& alphabet) {
  if (!is_json) return parse_samples_csv(text, alphabet);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  auto set = histogram_set_from_json(doc);
  if (alphabet && !(set.alphabet() == *alphabet))
    throw Error(ErrorCode::alphabet_mismatch, "histogram file alphabet differs from the expected alphabet");
  return set;
}

HistogramSet ingest_samples(const std::filesystem::path& path, const std::optional<Alphabet>& alphabet) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  const bool is_json = path.extension() == ".json" || (first != std::string::npos && text[first] == '{');
  return ingest_text(text, is_json, alphabet);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::io_error, "cannot write '" + tmp.string() + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error(ErrorCode::io_error, "write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::io_error, "cannot rename into '" + path.string() + "': " + ec.message());
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr))
    throw Error(ErrorCode::io_error, "sha256 failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

}  // namespace histrel
