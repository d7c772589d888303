#pragma once

#include <span>

namespace hangulphabet::detail {

// One canonical decomposition step: precomposed -> base + combining mark.
struct Decomposition {
  char32_t precomposed;
  char32_t base;
  char32_t mark;
};

// Canonical decompositions for precomposed Latin letters that plausibly show
// up in phonetic transcription (base letter used by the IPA plus one
// combining mark). Bases may themselves be precomposed; decompose in a loop.
std::span<const Decomposition> canonical_decompositions();

}  // namespace hangulphabet::detail
