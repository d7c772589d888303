#include "unicode_norm.h"

namespace hangulphabet::detail {

namespace {

// Transcribed from the UnicodeData canonical mappings.
constexpr Decomposition kDecompositions[] = {
    // a
    {0x00E0, 0x0061, 0x0300}, {0x00E1, 0x0061, 0x0301}, {0x00E2, 0x0061, 0x0302},
    {0x00E3, 0x0061, 0x0303}, {0x00E4, 0x0061, 0x0308}, {0x00E5, 0x0061, 0x030A},
    {0x0101, 0x0061, 0x0304}, {0x0103, 0x0061, 0x0306}, {0x01CE, 0x0061, 0x030C},
    {0x1E01, 0x0061, 0x0325},
    // e
    {0x00E8, 0x0065, 0x0300}, {0x00E9, 0x0065, 0x0301}, {0x00EA, 0x0065, 0x0302},
    {0x00EB, 0x0065, 0x0308}, {0x0113, 0x0065, 0x0304}, {0x0115, 0x0065, 0x0306},
    {0x011B, 0x0065, 0x030C}, {0x1EBD, 0x0065, 0x0303}, {0x1E1B, 0x0065, 0x0330},
    // i
    {0x00EC, 0x0069, 0x0300}, {0x00ED, 0x0069, 0x0301}, {0x00EE, 0x0069, 0x0302},
    {0x00EF, 0x0069, 0x0308}, {0x0129, 0x0069, 0x0303}, {0x012B, 0x0069, 0x0304},
    {0x012D, 0x0069, 0x0306}, {0x01D0, 0x0069, 0x030C}, {0x1E2D, 0x0069, 0x0330},
    // o
    {0x00F2, 0x006F, 0x0300}, {0x00F3, 0x006F, 0x0301}, {0x00F4, 0x006F, 0x0302},
    {0x00F5, 0x006F, 0x0303}, {0x00F6, 0x006F, 0x0308}, {0x014D, 0x006F, 0x0304},
    {0x014F, 0x006F, 0x0306}, {0x01D2, 0x006F, 0x030C}, {0x0151, 0x006F, 0x030B},
    // u
    {0x00F9, 0x0075, 0x0300}, {0x00FA, 0x0075, 0x0301}, {0x00FB, 0x0075, 0x0302},
    {0x00FC, 0x0075, 0x0308}, {0x0169, 0x0075, 0x0303}, {0x016B, 0x0075, 0x0304},
    {0x016D, 0x0075, 0x0306}, {0x016F, 0x0075, 0x030A}, {0x0171, 0x0075, 0x030B},
    {0x01D4, 0x0075, 0x030C}, {0x1E73, 0x0075, 0x0324}, {0x1E75, 0x0075, 0x0330},
    // y
    {0x00FD, 0x0079, 0x0301}, {0x00FF, 0x0079, 0x0308}, {0x0177, 0x0079, 0x0302},
    {0x0233, 0x0079, 0x0304}, {0x1EF3, 0x0079, 0x0300}, {0x1EF9, 0x0079, 0x0303},
    {0x1E99, 0x0079, 0x030A},
    // consonant letters
    {0x00E7, 0x0063, 0x0327}, {0x0107, 0x0063, 0x0301}, {0x010D, 0x0063, 0x030C},
    {0x00F1, 0x006E, 0x0303}, {0x0144, 0x006E, 0x0301}, {0x0148, 0x006E, 0x030C},
    {0x015B, 0x0073, 0x0301}, {0x0161, 0x0073, 0x030C},
    {0x017A, 0x007A, 0x0301}, {0x017E, 0x007A, 0x030C},
    {0x010F, 0x0064, 0x030C}, {0x0165, 0x0074, 0x030C},
    {0x0159, 0x0072, 0x030C}, {0x013A, 0x006C, 0x0301}, {0x013E, 0x006C, 0x030C},
    {0x1E7D, 0x0076, 0x0303}, {0x1E8D, 0x0078, 0x0308},
    // precomposed-on-precomposed (u with diaeresis and tone)
    {0x01D6, 0x00FC, 0x0304}, {0x01D8, 0x00FC, 0x0301},
    {0x01DA, 0x00FC, 0x030C}, {0x01DC, 0x00FC, 0x0300},
};

}  // namespace

std::span<const Decomposition> canonical_decompositions() {
  return kDecompositions;
}

}  // namespace hangulphabet::detail
