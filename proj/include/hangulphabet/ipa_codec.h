#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hangulphabet/phoneme_model.h"

namespace hangulphabet {

struct Diacritic {
  char32_t scalar = 0;
  std::string name;

  bool operator==(const Diacritic&) const = default;
};

// Tie bars join two base letters into a linked pair (affricates, double
// articulation). Handled structurally by the tokenizer, not as diacritics.
inline constexpr char32_t kTieBarAbove = 0x0361;
inline constexpr char32_t kTieBarBelow = 0x035C;

inline bool is_tie_bar(char32_t cp) {
  return cp == kTieBarAbove || cp == kTieBarBelow;
}

enum class TokenizeMode {
  Lenient,  // unknown scalars pass through
  Strict,   // unknown scalars are an error
};

// One parsed unit of IPA text.
struct Segment {
  enum class Kind { Consonant, Vowel, Passthrough };

  Kind kind = Kind::Passthrough;
  ConsonantFeatures consonant{};
  VowelFeatures vowel{};
  char32_t scalar = 0;  // base scalar; for Passthrough the payload itself
  std::vector<Diacritic> diacritics;
  std::u32string source;  // normalized source slice; concatenation of all
                          // segment sources reproduces the normalized input
  int tie_link = 0;       // 0 = not linked; equal ids form one linked run

  bool is_consonant() const { return kind == Kind::Consonant; }
  bool is_vowel() const { return kind == Kind::Vowel; }
  bool is_passthrough() const { return kind == Kind::Passthrough; }
};

// features_of() result: exactly one of the two bundles is meaningful.
struct SegmentFeatures {
  bool is_vowel = false;
  ConsonantFeatures consonant{};
  VowelFeatures vowel{};
};

struct ConsonantEntry {
  char32_t scalar = 0;
  ConsonantFeatures features{};
};

struct VowelEntry {
  char32_t scalar = 0;
  VowelFeatures features{};
};

// A distinct (height, backness) position named by the vowel table.
struct VowelAnchor {
  double height = 0.0;
  double backness = 0.0;
};

// The shipped symbol tables. Immutable after load; all lookups are
// read-only and safe to share across threads.
class IpaTable {
 public:
  // Reads consonants.tsv, vowels.tsv, impossible.tsv, diacritics.tsv.
  static IpaTable load(const std::filesystem::path& data_dir);
  static IpaTable from_text(std::string_view consonants_tsv,
                            std::string_view vowels_tsv,
                            std::string_view impossible_tsv,
                            std::string_view diacritics_tsv);

  const std::vector<ConsonantEntry>& consonants() const { return consonants_; }
  const std::vector<VowelEntry>& vowels() const { return vowels_; }
  const std::vector<Diacritic>& diacritics() const { return diacritics_; }
  // Distinct anchors in order of first appearance in the vowel table. This
  // order is a contract: vowel codepoints are assigned from it.
  const std::vector<VowelAnchor>& anchors() const { return anchors_; }
  const AttestationModel& attestation() const { return attestation_; }

  std::optional<ConsonantFeatures> find_consonant(char32_t scalar) const;
  std::optional<VowelFeatures> find_vowel(char32_t scalar) const;
  std::optional<Diacritic> find_diacritic(char32_t scalar) const;
  bool is_base_symbol(char32_t scalar) const;

  // Throws InputError(UnknownSymbol) when the scalar is in neither table.
  SegmentFeatures features_of(char32_t scalar) const;
  VowelFeatures vowel_features_of(char32_t scalar) const;

  // Inverse lookups; throw InputError(NoOfficialSymbol) when no IPA symbol
  // carries the requested features.
  char32_t ipa_of(const ConsonantFeatures& features) const;
  char32_t ipa_of(const VowelFeatures& features) const;

  // Index into anchors(), or -1 when (height, backness) is not an anchor.
  int anchor_index(double height, double backness) const;

  // Canonical normalization: decompose precomposed letters, then recompose
  // the sequences that form a symbol this table knows (e.g. c + cedilla).
  std::u32string normalize(std::u32string_view text) const;
  std::u32string normalize_utf8(std::string_view utf8_text) const;

 private:
  IpaTable() = default;

  std::vector<ConsonantEntry> consonants_;
  std::vector<VowelEntry> vowels_;
  std::vector<Diacritic> diacritics_;
  std::vector<VowelAnchor> anchors_;
  AttestationModel attestation_;
};

// Splits normalized text into segments. Combining diacritics attach to the
// preceding base segment; tie bars link neighbouring bases; unknown scalars
// pass through (lenient) or raise InputError(UnknownSymbol) (strict).
std::vector<Segment> tokenize(const IpaTable& table, std::u32string_view text,
                              TokenizeMode mode = TokenizeMode::Lenient);
std::vector<Segment> tokenize(const IpaTable& table, std::string_view utf8_text,
                              TokenizeMode mode = TokenizeMode::Lenient);

}  // namespace hangulphabet
