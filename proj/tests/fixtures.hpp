#pragma once

// Worked input/output pairs for the rewrite maps, used by the unit tests and
// the acceptance suite.

namespace lediag::fixtures {

// Staircase shape (6,6,5,4,3): full composite map, with rewrite pivots
// 3, 1, 1, 4 on the four non-trivial steps.
inline constexpr const char* kStaircaseInput =
    "111111\n"
    "000100\n"
    "11010\n"
    "1001\n"
    "111";
inline constexpr const char* kStaircaseImage =
    "101111\n"
    "000111\n"
    "11111\n"
    "1111\n"
    "001";

// Wide English shape (12,12,12,11,9): one rewrite step with pivot column 4;
// column 9 matches the pivot and collapses to a single bottom 1.
inline constexpr const char* kWideInput =
    "100010000000\n"
    "111111101110\n"
    "110010100100\n"
    "10000000000\n"
    "110110101";
inline constexpr const char* kWideStep =
    "100010000000\n"
    "111111100110\n"
    "110010100100\n"
    "10000000000\n"
    "000111101";

// French shape (row lengths 2,4,7,8,9,9 top to bottom): one rewrite step.
// The five rectangle pivots are 1, 4, 4, 4, 1; bands 1 and 2 pass the
// anchor filter and the chosen pivot is column 4. Columns 6 and 9 match the
// pivot on their own rows and collapse to a single bottom 1.
inline constexpr const char* kFrenchInput =
    "11\n"
    "1000\n"
    "1111011\n"
    "10100000\n"
    "111111111\n"
    "101101001";
inline constexpr const char* kFrenchStep =
    "11\n"
    "1000\n"
    "1111001\n"
    "10100000\n"
    "111110110\n"
    "000111111";

}  // namespace lediag::fixtures
