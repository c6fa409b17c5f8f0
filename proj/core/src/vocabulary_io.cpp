#include <openssl/evp.h>

#include <fstream>

#include "flcc/bpe.hpp"
#include "flcc/error.hpp"
#include "flcc/sentinels.hpp"
#include "digest.hpp"
#include "json.hpp"

namespace flcc {
namespace {

using nlohmann::json;

constexpr int kVocabFileVersion = 1;

bool is_valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + len > s.size()) return false;
    for (std::size_t k = 1; k < len; ++k) {
      const auto cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    const bool overlong = (len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000);
    if (overlong || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
    i += len;
  }
  return true;
}

std::string base64_encode(std::string_view bytes) {
  std::string out(4 * ((bytes.size() + 2) / 3), '\0');
  const int n = EVP_EncodeBlock(reinterpret_cast<unsigned char*>(out.data()),
                                reinterpret_cast<const unsigned char*>(bytes.data()), static_cast<int>(bytes.size()));
  out.resize(static_cast<std::size_t>(n));
  return out;
}

std::optional<std::string> base64_decode(std::string_view text) {
  if (text.size() % 4 != 0) return std::nullopt;
  std::string out(3 * text.size() / 4, '\0');
  const int n = EVP_DecodeBlock(reinterpret_cast<unsigned char*>(out.data()),
                                reinterpret_cast<const unsigned char*>(text.data()), static_cast<int>(text.size()));
  if (n < 0) return std::nullopt;
  std::size_t size = static_cast<std::size_t>(n);
  // EVP_DecodeBlock counts padding as zero bytes.
  if (text.ends_with("==")) {
    size -= 2;
  } else if (text.ends_with("=")) {
    size -= 1;
  }
  out.resize(size);
  return out;
}

json token_to_json(const std::string& bytes) {
  if (is_valid_utf8(bytes)) return bytes;
  return json{{"base64", base64_encode(bytes)}};
}

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::kMalformedVocab, what); }

std::string token_from_json(const json& j, std::size_t index) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_object() && j.contains("base64") && j["base64"].is_string()) {
    if (auto bytes = base64_decode(j["base64"].get<std::string>())) return *bytes;
  }
  malformed("token " + std::to_string(index) + " is neither a string nor a {\"base64\": ...} object");
}

json to_json(const Vocabulary& vocab) {
  json specials = json::object();
  for (std::size_t s = 0; s < kSpecialCount; ++s) {
    const auto kind = static_cast<SpecialToken>(s);
    specials[std::string(special_name(kind))] = Vocabulary::special_id(kind);
  }
  json tokens = json::array();
  for (const auto& t : vocab.tokens()) tokens.push_back(token_to_json(t));
  json merges = json::array();
  for (const auto& m : vocab.merges()) merges.push_back(json::array({m.left, m.right}));
  return json{{"version", kVocabFileVersion},
              {"segmentation", std::string(to_string(vocab.segmentation()))},
              {"specials", std::move(specials)},
              {"tokens", std::move(tokens)},
              {"merges", std::move(merges)}};
}

bool contains_reserved(std::string_view bytes) {
  if (bytes.find('\n') != std::string_view::npos) return true;
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    if (sentinel_at(bytes, i) >= 0) return true;
  }
  return false;
}

}  // namespace

void save_vocab(const Vocabulary& vocab, std::ostream& out) { out << to_json(vocab).dump(1) << '\n'; }

void save_vocab(const Vocabulary& vocab, const std::filesystem::path& destination) {
  std::ofstream out(destination, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + destination.string());
  save_vocab(vocab, out);
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + destination.string());
}

Vocabulary load_vocab(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    malformed(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) malformed("top level is not an object");
  if (!doc.contains("version") || doc["version"] != kVocabFileVersion) malformed("version must be 1");

  auto segmentation = Segmentation::kLine;
  if (doc.contains("segmentation")) {
    const auto& s = doc["segmentation"];
    const auto parsed = s.is_string() ? segmentation_from_string(s.get<std::string>()) : std::nullopt;
    if (!parsed) malformed("segmentation must be \"line\" or \"space\"");
    segmentation = *parsed;
  }

  if (!doc.contains("tokens") || !doc["tokens"].is_array()) malformed("tokens array missing");
  if (!doc.contains("merges") || !doc["merges"].is_array()) malformed("merges array missing");
  if (!doc.contains("specials") || !doc["specials"].is_object()) malformed("specials object missing");

  const auto& tokens = doc["tokens"];
  const auto& merges = doc["merges"];
  if (tokens.size() < kBaseVocabSize) malformed("fewer tokens than the byte-level base vocabulary");
  if (tokens.size() != kBaseVocabSize + merges.size()) {
    malformed("token count " + std::to_string(tokens.size()) + " does not equal base + merges (" +
              std::to_string(kBaseVocabSize + merges.size()) + ")");
  }

  auto vocab = Vocabulary::byte_level(segmentation);
  for (std::size_t i = 0; i < kBaseVocabSize; ++i) {
    if (token_from_json(tokens[i], i) != vocab.bytes(static_cast<TokenId>(i))) {
      malformed(i < kByteTokenCount ? "byte token " + std::to_string(i) + " does not hold its byte"
                                    : "special token " + std::to_string(i) + " has unexpected text");
    }
  }

  const auto& specials = doc["specials"];
  if (specials.size() != kSpecialCount) malformed("specials must name exactly " + std::to_string(kSpecialCount));
  for (auto it = specials.begin(); it != specials.end(); ++it) {
    const auto kind = special_from_name(it.key());
    if (!kind) malformed("unknown special \"" + it.key() + "\"");
    if (!it.value().is_number_integer() || it.value().get<TokenId>() != Vocabulary::special_id(*kind)) {
      malformed("special " + it.key() + " must have id " + std::to_string(Vocabulary::special_id(*kind)));
    }
  }

  for (std::size_t i = 0; i < merges.size(); ++i) {
    const auto& m = merges[i];
    const auto next = static_cast<TokenId>(kBaseVocabSize + i);
    if (!m.is_array() || m.size() != 2 || !m[0].is_number_integer() || !m[1].is_number_integer()) {
      malformed("merge " + std::to_string(i) + " is not a [left, right] pair");
    }
    const auto left = m[0].get<TokenId>();
    const auto right = m[1].get<TokenId>();
    if (left < 0 || right < 0 || left >= next || right >= next) {
      malformed("merge " + std::to_string(i) + " references a missing token");
    }
    if (Vocabulary::special_kind(left) || Vocabulary::special_kind(right)) {
      malformed("merge " + std::to_string(i) + " uses a special token");
    }
    if (vocab.find_merge(left, right)) malformed("merge " + std::to_string(i) + " is a duplicate");
    const auto id = vocab.add_merge(left, right);
    const auto expected = token_from_json(tokens[static_cast<std::size_t>(id)], static_cast<std::size_t>(id));
    if (expected != vocab.bytes(id)) {
      malformed("token " + std::to_string(id) + " is not the concatenation of merge " + std::to_string(i));
    }
    if (contains_reserved(expected)) {
      malformed("token " + std::to_string(id) + " contains a line terminator or sentinel");
    }
  }
  return vocab;
}

Vocabulary load_vocab(const std::filesystem::path& source) {
  std::ifstream in(source, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + source.string());
  return load_vocab(in);
}

std::string vocabulary_fingerprint(const Vocabulary& vocab) {
  return "sha256:" + detail::sha256_hex(to_json(vocab).dump());
}

}  // namespace flcc
