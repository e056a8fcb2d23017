#pragma once

// Cycle listings for small Fermat and Mersenne numbers and divisors of M_11,
// transcribed in canonical form (each cycle starts at its least element), plus
// two of the 32-cycles of 641.

#include <cstdint>
#include <map>
#include <vector>

namespace oddcycles::testing {

using CycleList = std::vector<std::vector<std::uint64_t>>;

inline const std::map<std::uint64_t, CycleList>& reference_cycle_tables() {
  static const std::map<std::uint64_t, CycleList> tables = {
      {3, {{1}}},
      {5, {{1, 3}}},
      {7, {{1}, {3, 5}}},
      {15, {{1}, {5}, {3, 9}, {7, 11, 13}}},
      {17, {{1, 9, 13, 15}, {3, 5, 11, 7}}},
      {23, {{1, 3, 13, 9}, {5, 7, 15, 19, 21, 11, 17}}},
      {31, {{1}, {3, 17}, {5, 9}, {7, 19, 25}, {11, 21, 13}, {15, 23, 27, 29}}},
      {63,
       {{1}, {9}, {21},
        {3, 33}, {5, 17}, {27, 45},
        {7, 35, 49}, {11, 37, 25}, {13, 19, 41},
        {15, 39, 51, 57}, {23, 43, 53, 29},
        {31, 47, 55, 59, 61}}},
      {89,
       {{3, 23, 7},
        {1, 45, 67, 39},
        {5, 47, 17, 53, 71}, {13, 51, 35, 31, 15},
        {9, 49, 69, 79, 21, 55}, {19, 27, 29, 59, 37, 63},
        {11, 25, 57, 73, 81, 85, 87},
        {33, 61, 75, 41, 65, 77, 83, 43}}},
      {127,
       {{1},
        {3, 65}, {5, 33}, {9, 17},
        {7, 67, 97}, {11, 69, 49}, {13, 35, 81}, {19, 73, 25}, {21, 37, 41},
        {15, 71, 99, 113}, {23, 75, 101, 57}, {27, 77, 51, 89}, {29, 39, 83, 105},
        {43, 85, 53, 45},
        {31, 79, 103, 115, 121}, {47, 87, 107, 117, 61}, {55, 91, 109, 59, 93},
        {63, 95, 111, 119, 123, 125}}},
      {257,
       {{1, 129, 193, 225, 241, 249, 253, 255}, {3, 65, 161, 209, 233, 245, 251, 127},
        {5, 131, 97, 177, 217, 237, 247, 63}, {7, 33, 145, 201, 229, 243, 125, 191},
        {9, 133, 195, 113, 185, 221, 239, 31}, {11, 67, 81, 169, 213, 235, 123, 95},
        {13, 135, 49, 153, 205, 231, 61, 159}, {15, 17, 137, 197, 227, 121, 189, 223},
        {19, 69, 163, 105, 181, 219, 119, 47}, {21, 139, 99, 89, 173, 215, 59, 79},
        {23, 35, 73, 165, 211, 117, 187, 111}, {25, 141, 199, 57, 157, 207, 29, 143},
        {27, 71, 41, 149, 203, 115, 93, 175}, {37, 147, 101, 179, 109, 183, 55, 39},
        {43, 75, 83, 85, 171, 107, 91, 87}, {45, 151, 51, 77, 167, 53, 155, 103}}},
  };
  return tables;
}

/// Irreducible cycles of 15 and 63 as listed separately.
inline const std::map<std::uint64_t, CycleList>& reference_irreducible_tables() {
  static const std::map<std::uint64_t, CycleList> tables = {
      {15, {{1}, {7, 11, 13}}},
      {63, {{1}, {5, 17}, {11, 37, 25}, {13, 19, 41}, {23, 43, 53, 29}, {31, 47, 55, 59, 61}}},
  };
  return tables;
}

inline const CycleList& reference_641_cycles() {
  static const CycleList cycles = {
      {1, 321, 481, 561, 601, 621, 631, 159, 25, 333, 487, 141, 391, 129, 385, 513,
       577, 609, 625, 633, 637, 639, 5, 323, 241, 441, 541, 591, 77, 359, 125, 383},
      {3, 161, 401, 521, 581, 611, 313, 477, 559, 75, 179, 205, 423, 133, 387, 257,
       449, 545, 593, 617, 629, 635, 319, 15, 41, 341, 491, 283, 231, 109, 375, 127},
  };
  return cycles;
}

/// Reference k-cycle counts N_1..N_{p-1} of M_p.
inline const std::map<std::uint64_t, std::vector<std::uint64_t>>& reference_mersenne_counts() {
  static const std::map<std::uint64_t, std::vector<std::uint64_t>> counts = {
      {3, {1, 1}},
      {5, {1, 2, 2, 1}},
      {7, {1, 3, 5, 5, 3, 1}},
      {11, {1, 5, 15, 30, 42, 42, 30, 15, 5, 1}},
      {13, {1, 6, 22, 55, 99, 132, 132, 99, 55, 22, 6, 1}},
  };
  return counts;
}

}  // namespace oddcycles::testing
