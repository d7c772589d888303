#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace hangulphabet {

// Row order of the consonant grid. Nasal comes first; the index is a
// contract (codepoint assignment depends on it), so never reorder.
enum class Manner : std::uint8_t {
  Nasal = 0,
  Plosive,
  Fricative,
  Approximant,
  TapFlap,
  Trill,
  LateralFricative,
  LateralApproximant,
  LateralFlap,
};

// Column order of the consonant grid, front of the mouth to the back.
enum class Place : std::uint8_t {
  Bilabial = 0,
  Labiodental,
  Dental,
  Alveolar,
  PalatoAlveolar,
  Retroflex,
  AlveoloPalatal,
  Palatal,
  Velar,
  Uvular,
  Pharyngeal,
  Epiglottal,
  Glottal,
};

enum class Voicing : std::uint8_t {
  Voiceless = 0,
  Voiced,
};

enum class MacroClass : std::uint8_t {
  Labial,
  Coronal,
  Dorsal,
  Radical,
  Laryngeal,
};

inline constexpr int kMannerCount = 9;
inline constexpr int kPlaceCount = 13;

struct GridDimensions {
  int manner_count;
  int place_count;
};

constexpr GridDimensions grid_dimensions() { return {kMannerCount, kPlaceCount}; }

MacroClass macro_class_of(Place place);

std::string_view manner_name(Manner m);
std::string_view place_name(Place p);
std::string_view voicing_name(Voicing v);
std::string_view macro_class_name(MacroClass c);

// Fixed three-letter codes used in canonical grapheme names (NAS, PLO, ...).
std::string_view manner_code(Manner m);
std::string_view place_code(Place p);
std::string_view voicing_code(Voicing v);

std::optional<Manner> manner_from_name(std::string_view name);
std::optional<Place> place_from_name(std::string_view name);
std::optional<Voicing> voicing_from_name(std::string_view name);
std::optional<Manner> manner_from_code(std::string_view code);
std::optional<Place> place_from_code(std::string_view code);
std::optional<Voicing> voicing_from_code(std::string_view code);

struct ConsonantFeatures {
  Manner manner = Manner::Nasal;
  Place place = Place::Bilabial;
  Voicing voicing = Voicing::Voiceless;

  bool operator==(const ConsonantFeatures&) const = default;
};

// Tongue position on the vowel grid. height 0 = close, 1 = open;
// backness 0 = front, 1 = back.
struct VowelFeatures {
  double height = 0.0;
  double backness = 0.0;
  bool rounded = false;

  bool operator==(const VowelFeatures&) const = default;
};

enum class AttestationStatus : std::uint8_t {
  Official,    // an IPA symbol exists for the combination
  Unofficial,  // expressible by radicals, no IPA symbol
  Impossible,  // articulation judged impossible (shaded IPA cell)
};

std::string_view attestation_name(AttestationStatus s);

// An impossible grid cell; no voicing means both voicings are impossible.
struct ImpossibleCell {
  Manner manner;
  Place place;
  std::optional<Voicing> voicing;
};

// Attestation over the full manner x place x voicing grid. Immutable once
// built; concurrent reads are safe.
class AttestationModel {
 public:
  AttestationModel() = default;
  // Throws DataError if an official triple lands on an impossible cell.
  AttestationModel(std::vector<ConsonantFeatures> official,
                   std::vector<ImpossibleCell> impossible);

  AttestationStatus attestation_of(const ConsonantFeatures& f) const;
  bool is_impossible(Manner m, Place p, Voicing v) const;
  bool cell_fully_impossible(Manner m, Place p) const;
  int official_count() const { return static_cast<int>(official_.size()); }

 private:
  std::vector<ConsonantFeatures> official_;
  std::vector<ImpossibleCell> impossible_;
};

}  // namespace hangulphabet
