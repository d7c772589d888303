#include "hangulphabet/phoneme_model.h"

#include <algorithm>
#include <array>

#include "hangulphabet/error.h"

namespace hangulphabet {

namespace {

constexpr std::array<std::string_view, kMannerCount> kMannerNames = {
    "Nasal",     "Plosive", "Fricative",        "Approximant",        "TapFlap",
    "Trill",     "LateralFricative", "LateralApproximant", "LateralFlap"};

constexpr std::array<std::string_view, kPlaceCount> kPlaceNames = {
    "Bilabial",  "Labiodental", "Dental",         "Alveolar", "PalatoAlveolar",
    "Retroflex", "AlveoloPalatal", "Palatal",     "Velar",    "Uvular",
    "Pharyngeal", "Epiglottal",  "Glottal"};

constexpr std::array<std::string_view, 2> kVoicingNames = {"Voiceless", "Voiced"};

constexpr std::array<std::string_view, 5> kMacroClassNames = {
    "Labial", "Coronal", "Dorsal", "Radical", "Laryngeal"};

constexpr std::array<std::string_view, kMannerCount> kMannerCodes = {
    "NAS", "PLO", "FRI", "APP", "TAP", "TRL", "LFR", "LAP", "LFL"};

constexpr std::array<std::string_view, kPlaceCount> kPlaceCodes = {
    "BLB", "LBD", "DEN", "ALV", "PAV", "RET", "ALP",
    "PAL", "VEL", "UVU", "PHA", "EPI", "GLO"};

constexpr std::array<std::string_view, 2> kVoicingCodes = {"VLS", "VCD"};

template <typename Enum, std::size_t N>
std::optional<Enum> lookup(const std::array<std::string_view, N>& table,
                           std::string_view key) {
  for (std::size_t i = 0; i < N; ++i) {
    if (table[i] == key) return static_cast<Enum>(i);
  }
  return std::nullopt;
}

}  // namespace

MacroClass macro_class_of(Place place) {
  switch (place) {
    case Place::Bilabial:
    case Place::Labiodental:
      return MacroClass::Labial;
    case Place::Dental:
    case Place::Alveolar:
    case Place::PalatoAlveolar:
    case Place::Retroflex:
    case Place::AlveoloPalatal:
      return MacroClass::Coronal;
    case Place::Palatal:
    case Place::Velar:
    case Place::Uvular:
      return MacroClass::Dorsal;
    case Place::Pharyngeal:
      return MacroClass::Radical;
    case Place::Epiglottal:
    case Place::Glottal:
      return MacroClass::Laryngeal;
  }
  return MacroClass::Laryngeal;  // unreachable
}

std::string_view manner_name(Manner m) { return kMannerNames[static_cast<int>(m)]; }
std::string_view place_name(Place p) { return kPlaceNames[static_cast<int>(p)]; }
std::string_view voicing_name(Voicing v) { return kVoicingNames[static_cast<int>(v)]; }
std::string_view macro_class_name(MacroClass c) {
  return kMacroClassNames[static_cast<int>(c)];
}

std::string_view manner_code(Manner m) { return kMannerCodes[static_cast<int>(m)]; }
std::string_view place_code(Place p) { return kPlaceCodes[static_cast<int>(p)]; }
std::string_view voicing_code(Voicing v) { return kVoicingCodes[static_cast<int>(v)]; }

std::optional<Manner> manner_from_name(std::string_view name) {
  return lookup<Manner>(kMannerNames, name);
}
std::optional<Place> place_from_name(std::string_view name) {
  return lookup<Place>(kPlaceNames, name);
}
std::optional<Voicing> voicing_from_name(std::string_view name) {
  return lookup<Voicing>(kVoicingNames, name);
}
std::optional<Manner> manner_from_code(std::string_view code) {
  return lookup<Manner>(kMannerCodes, code);
}
std::optional<Place> place_from_code(std::string_view code) {
  return lookup<Place>(kPlaceCodes, code);
}
std::optional<Voicing> voicing_from_code(std::string_view code) {
  return lookup<Voicing>(kVoicingCodes, code);
}

std::string_view attestation_name(AttestationStatus s) {
  switch (s) {
    case AttestationStatus::Official:
      return "Official";
    case AttestationStatus::Unofficial:
      return "Unofficial";
    case AttestationStatus::Impossible:
      return "Impossible";
  }
  return "Unofficial";  // unreachable
}

AttestationModel::AttestationModel(std::vector<ConsonantFeatures> official,
                                   std::vector<ImpossibleCell> impossible)
    : official_(std::move(official)), impossible_(std::move(impossible)) {
  for (const auto& f : official_) {
    if (is_impossible(f.manner, f.place, f.voicing)) {
      throw DataError(Errc::MalformedData,
                      std::string("official symbol sits on an impossible cell: ") +
                          std::string(manner_name(f.manner)) + "/" +
                          std::string(place_name(f.place)) + "/" +
                          std::string(voicing_name(f.voicing)));
    }
  }
}

AttestationStatus AttestationModel::attestation_of(const ConsonantFeatures& f) const {
  if (std::find(official_.begin(), official_.end(), f) != official_.end()) {
    return AttestationStatus::Official;
  }
  if (is_impossible(f.manner, f.place, f.voicing)) {
    return AttestationStatus::Impossible;
  }
  return AttestationStatus::Unofficial;
}

bool AttestationModel::is_impossible(Manner m, Place p, Voicing v) const {
  for (const auto& cell : impossible_) {
    if (cell.manner == m && cell.place == p &&
        (!cell.voicing || *cell.voicing == v)) {
      return true;
    }
  }
  return false;
}

bool AttestationModel::cell_fully_impossible(Manner m, Place p) const {
  return is_impossible(m, p, Voicing::Voiceless) &&
         is_impossible(m, p, Voicing::Voiced);
}

}  // namespace hangulphabet
