#pragma once

// Published values that `reproduce-paper` compares against.  Entries are
// data only; nothing here is computed.

#include <string>
#include <vector>

namespace z4cent::golden {

inline constexpr long kOrderG = 384;
inline constexpr long kOrderZ = 4;
inline constexpr long kOrderPG = 96;

inline const std::vector<std::string> kCenterWords = {"1", "T^2", "T^4", "T^6"};

inline const std::vector<std::string> kClassWords = {"1", "D", "D^2", "D^3", "D^4",
                                                     "D^6", "T", "D T", "D^4 T", "D^2 T D^4 T"};
inline const std::vector<long> kClassOrders = {1, 8, 4, 8, 2, 4, 2, 3, 4, 4};
inline const std::vector<long> kClassSizes = {1, 12, 3, 12, 3, 3, 12, 32, 12, 6};

inline const std::vector<long> kDegrees = {1, 1, 2, 3, 3, 3, 3, 3, 3, 6};

// a = -1-2i, b = -1+2i
inline const std::vector<std::vector<std::string>> kCharacterTable = {
    {"1", "1", "1", "1", "1", "1", "1", "1", "1", "1"},
    {"1", "-1", "1", "-1", "1", "1", "-1", "1", "-1", "1"},
    {"2", "0", "2", "0", "2", "2", "0", "-1", "0", "2"},
    {"3", "-1", "-1", "-1", "3", "-1", "1", "0", "1", "-1"},
    {"3", "1", "-1", "1", "3", "-1", "-1", "0", "-1", "-1"},
    {"3", "-i", "a", "i", "-1", "b", "-1", "0", "1", "1"},
    {"3", "i", "b", "-i", "-1", "a", "-1", "0", "1", "1"},
    {"3", "-i", "b", "i", "-1", "a", "1", "0", "-1", "1"},
    {"3", "i", "a", "-i", "-1", "b", "1", "0", "-1", "1"},
    {"6", "0", "2", "0", "-2", "2", "0", "0", "0", "-2"},
};

// chi7 * chi_i, i = 1..10
inline const std::vector<std::vector<int>> kProductsWithChi7 = {
    {7}, {8}, {7, 8}, {6, 10}, {9, 10}, {1, 3, 10}, {4, 6, 9}, {5, 6, 9}, {2, 3, 10}, {4, 5, 7, 8, 10},
};

inline const std::vector<std::string> kChi7TimesChi10 = {"18", "0", "-2+4i", "0", "2", "-2-4i", "0", "0", "0", "-2"};

inline const std::vector<std::vector<long>> kFusionMatrix = {
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 0, 1, 1, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 0, 0, 1, 1}, {1, 0, 1, 0, 0, 0, 0, 0, 0, 1},
    {0, 0, 0, 1, 0, 1, 0, 0, 1, 0}, {0, 0, 0, 0, 1, 1, 0, 0, 1, 0}, {0, 1, 1, 0, 0, 0, 0, 0, 0, 1},
    {0, 0, 0, 1, 1, 0, 1, 1, 0, 1},
};

// Bratteli diagram rows k = 0..5
inline const std::vector<std::vector<long>> kMultiplicities = {
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 1, 0, 0, 0},  {0, 0, 0, 1, 0, 1, 0, 0, 1, 0},
    {1, 1, 2, 0, 0, 1, 0, 0, 0, 3}, {1, 0, 1, 3, 3, 0, 6, 6, 0, 4},  {0, 0, 0, 10, 10, 15, 6, 5, 15, 10},
};

// dim of the centralizer algebra, k = 0..9
inline const std::vector<long> kCentralizerDims = {1, 1, 3, 16, 108, 811, 6513, 54706, 472818, 4157701};

inline const std::vector<std::string> kRelations = {"R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8"};

}  // namespace z4cent::golden
