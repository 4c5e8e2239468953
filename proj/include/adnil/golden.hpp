#pragma once

#include <optional>
#include <vector>

#include "adnil/root_system.hpp"
#include "adnil/tabulate.hpp"

namespace adnil {

/// Published counts (#N_I, #Ab_I) for the exceptional types, keyed by
/// parabolic mask in Bourbaki numbering (bit i-1 set iff alpha_i in I).
namespace golden {

inline const GoldenTable& g2() {
  static const GoldenTable table{SimpleType{Kind::G, 2}, {
      {0x00, 8, 4}, {0x01, 3, 2}, {0x02, 4, 3}, {0x03, 1, 1},
  }};
  return table;
}

inline const GoldenTable& f4() {
  static const GoldenTable table{SimpleType{Kind::F, 4}, {
      {0x00, 105, 16}, {0x01, 24, 6}, {0x02, 35, 12}, {0x03, 10, 5},
      {0x04, 32, 10}, {0x05, 8, 4}, {0x06, 14, 7}, {0x07, 4, 3},
      {0x08, 49, 9}, {0x09, 12, 4}, {0x0a, 14, 6}, {0x0b, 5, 3},
      {0x0c, 10, 4}, {0x0d, 3, 2}, {0x0e, 3, 2}, {0x0f, 1, 1},
  }};
  return table;
}

inline const GoldenTable& e6() {
  static const GoldenTable table{SimpleType{Kind::E, 6}, {
      {0x00, 833, 64}, {0x01, 197, 21}, {0x02, 201, 40}, {0x03, 60, 16},
      {0x04, 255, 40}, {0x05, 51, 10}, {0x06, 82, 24}, {0x07, 21, 8},
      {0x08, 323, 41}, {0x09, 81, 16}, {0x0a, 60, 22}, {0x0b, 23, 11},
      {0x0c, 80, 22}, {0x0d, 16, 6}, {0x0e, 19, 10}, {0x0f, 6, 4},
      {0x10, 255, 40}, {0x11, 68, 16}, {0x12, 82, 24}, {0x13, 26, 11},
      {0x14, 90, 24}, {0x15, 21, 8}, {0x16, 36, 15}, {0x17, 10, 6},
      {0x18, 80, 22}, {0x19, 27, 11}, {0x1a, 19, 10}, {0x1b, 9, 6},
      {0x1c, 20, 10}, {0x1d, 6, 4}, {0x1e, 5, 4}, {0x1f, 2, 2},
      {0x20, 197, 21}, {0x21, 56, 8}, {0x22, 60, 16}, {0x23, 20, 7},
      {0x24, 68, 16}, {0x25, 18, 5}, {0x26, 26, 11}, {0x27, 8, 4},
      {0x28, 81, 16}, {0x29, 24, 6}, {0x2a, 23, 11}, {0x2b, 9, 5},
      {0x2c, 27, 11}, {0x2d, 7, 3}, {0x2e, 9, 6}, {0x2f, 3, 2},
      {0x30, 51, 10}, {0x31, 18, 5}, {0x32, 21, 8}, {0x33, 8, 4},
      {0x34, 21, 8}, {0x35, 8, 4}, {0x36, 10, 6}, {0x37, 4, 3},
      {0x38, 16, 6}, {0x39, 7, 3}, {0x3a, 6, 4}, {0x3b, 3, 2},
      {0x3c, 6, 4}, {0x3d, 3, 2}, {0x3e, 2, 2}, {0x3f, 1, 1},
  }};
  return table;
}

inline const GoldenTable& e7() {
  static const GoldenTable table{SimpleType{Kind::E, 7}, {
      {0x00, 4160, 128}, {0x01, 837, 70}, {0x02, 980, 78}, {0x03, 261, 42},
      {0x04, 1251, 73}, {0x05, 202, 35}, {0x06, 391, 39}, {0x07, 83, 18},
      {0x08, 1600, 84}, {0x09, 358, 47}, {0x0a, 298, 46}, {0x0b, 101, 25},
      {0x0c, 373, 41}, {0x0d, 64, 20}, {0x0e, 83, 18}, {0x0f, 21, 8},
      {0x10, 1385, 73}, {0x11, 314, 45}, {0x12, 374, 39}, {0x13, 110, 25},
      {0x14, 456, 48}, {0x15, 88, 25}, {0x16, 160, 24}, {0x17, 39, 13},
      {0x18, 415, 41}, {0x19, 123, 26}, {0x1a, 80, 18}, {0x1b, 34, 12},
      {0x1c, 95, 22}, {0x1d, 23, 11}, {0x1e, 20, 8}, {0x1f, 6, 4},
      {0x20, 1076, 70}, {0x21, 261, 42}, {0x22, 315, 42}, {0x23, 95, 26},
      {0x24, 377, 45}, {0x25, 77, 23}, {0x26, 138, 25}, {0x27, 34, 13},
      {0x28, 467, 47}, {0x29, 122, 30}, {0x2a, 113, 25}, {0x2b, 41, 16},
      {0x2c, 137, 26}, {0x2d, 29, 14}, {0x2e, 37, 12}, {0x2f, 10, 6},
      {0x30, 291, 35}, {0x31, 89, 23}, {0x32, 94, 18}, {0x33, 34, 13},
      {0x34, 115, 25}, {0x35, 33, 14}, {0x36, 45, 13}, {0x37, 15, 8},
      {0x38, 93, 20}, {0x39, 35, 14}, {0x3a, 21, 8}, {0x3b, 10, 6},
      {0x3c, 27, 11}, {0x3d, 9, 6}, {0x3e, 6, 4}, {0x3f, 2, 2},
      {0x40, 879, 32}, {0x41, 215, 24}, {0x42, 231, 23}, {0x43, 71, 16},
      {0x44, 285, 21}, {0x45, 62, 15}, {0x46, 98, 13}, {0x47, 26, 8},
      {0x48, 357, 25}, {0x49, 94, 18}, {0x4a, 80, 17}, {0x4b, 30, 11},
      {0x4c, 100, 15}, {0x4d, 23, 10}, {0x4e, 27, 8}, {0x4f, 8, 4},
      {0x50, 288, 22}, {0x51, 81, 17}, {0x52, 105, 16}, {0x53, 35, 12},
      {0x54, 111, 14}, {0x55, 28, 10}, {0x56, 49, 9}, {0x57, 14, 6},
      {0x58, 101, 15}, {0x59, 35, 11}, {0x5a, 32, 10}, {0x5b, 14, 7},
      {0x5c, 31, 8}, {0x5d, 9, 5}, {0x5e, 10, 4}, {0x5f, 3, 2},
      {0x60, 203, 13}, {0x61, 61, 11}, {0x62, 64, 10}, {0x63, 23, 8},
      {0x64, 73, 10}, {0x65, 22, 8}, {0x66, 29, 7}, {0x67, 10, 5},
      {0x68, 86, 11}, {0x69, 28, 9}, {0x6a, 26, 8}, {0x6b, 11, 6},
      {0x6c, 31, 8}, {0x6d, 10, 6}, {0x6e, 11, 5}, {0x6f, 4, 3},
      {0x70, 54, 7}, {0x71, 20, 6}, {0x72, 24, 6}, {0x73, 10, 5},
      {0x74, 23, 5}, {0x75, 9, 4}, {0x76, 12, 4}, {0x77, 5, 3},
      {0x78, 18, 5}, {0x79, 8, 4}, {0x7a, 8, 4}, {0x7b, 4, 3},
      {0x7c, 7, 3}, {0x7d, 3, 2}, {0x7e, 3, 2}, {0x7f, 1, 1},
  }};
  return table;
}

inline const GoldenTable& e8() {
  static const GoldenTable table{SimpleType{Kind::E, 8}, {
      {0x00, 25080, 256}, {0x01, 4554, 143}, {0x02, 6188, 124}, {0x03, 1422, 58},
      {0x04, 7397, 153}, {0x05, 1121, 79}, {0x06, 2183, 63}, {0x07, 392, 26},
      {0x08, 9541, 163}, {0x09, 1981, 85}, {0x0a, 1898, 71}, {0x0b, 521, 30},
      {0x0c, 2150, 88}, {0x0d, 361, 42}, {0x0e, 430, 29}, {0x0f, 87, 11},
      {0x10, 8691, 153}, {0x11, 1818, 80}, {0x12, 2183, 86}, {0x13, 599, 41},
      {0x14, 2786, 88}, {0x15, 484, 40}, {0x16, 873, 45}, {0x17, 186, 18},
      {0x18, 2502, 84}, {0x19, 658, 41}, {0x1a, 461, 39}, {0x1b, 160, 17},
      {0x1c, 566, 43}, {0x1d, 112, 18}, {0x1e, 105, 16}, {0x1f, 24, 6},
      {0x20, 7169, 149}, {0x21, 1554, 85}, {0x22, 2047, 81}, {0x23, 549, 41},
      {0x24, 2448, 93}, {0x25, 446, 48}, {0x26, 814, 45}, {0x27, 170, 20},
      {0x28, 3039, 99}, {0x29, 741, 53}, {0x2a, 689, 49}, {0x2b, 218, 23},
      {0x2c, 815, 55}, {0x2d, 161, 26}, {0x2e, 187, 22}, {0x2f, 42, 9},
      {0x30, 1906, 74}, {0x31, 514, 39}, {0x32, 553, 49}, {0x33, 188, 25},
      {0x34, 726, 45}, {0x35, 163, 20}, {0x36, 255, 28}, {0x37, 70, 12},
      {0x38, 577, 42}, {0x39, 186, 21}, {0x3a, 121, 23}, {0x3b, 48, 11},
      {0x3c, 154, 22}, {0x3d, 36, 9}, {0x3e, 32, 10}, {0x3f, 8, 4},
      {0x40, 5512, 111}, {0x41, 1260, 65}, {0x42, 1583, 61}, {0x43, 439, 31},
      {0x44, 1890, 73}, {0x45, 378, 40}, {0x46, 636, 35}, {0x47, 141, 16},
      {0x48, 2365, 79}, {0x49, 598, 45}, {0x4a, 580, 39}, {0x4b, 182, 19},
      {0x4c, 668, 47}, {0x4d, 143, 25}, {0x4e, 161, 18}, {0x4f, 37, 8},
      {0x50, 2091, 74}, {0x51, 541, 43}, {0x52, 681, 39}, {0x53, 214, 21},
      {0x54, 788, 49}, {0x55, 175, 25}, {0x56, 301, 24}, {0x57, 75, 11},
      {0x58, 736, 46}, {0x59, 225, 26}, {0x5a, 184, 19}, {0x5b, 69, 10},
      {0x5c, 206, 27}, {0x5d, 49, 13}, {0x5e, 49, 9}, {0x5f, 12, 4},
      {0x60, 1279, 55}, {0x61, 356, 32}, {0x62, 412, 34}, {0x63, 140, 19},
      {0x64, 498, 38}, {0x65, 123, 20}, {0x66, 192, 22}, {0x67, 54, 11},
      {0x68, 596, 41}, {0x69, 184, 24}, {0x6a, 165, 23}, {0x6b, 65, 13},
      {0x6c, 200, 25}, {0x6d, 52, 13}, {0x6e, 58, 12}, {0x6f, 17, 6},
      {0x70, 363, 30}, {0x71, 119, 17}, {0x72, 134, 17}, {0x73, 53, 10},
      {0x74, 153, 21}, {0x75, 44, 10}, {0x76, 68, 12}, {0x77, 23, 6},
      {0x78, 127, 19}, {0x79, 48, 11}, {0x7a, 34, 8}, {0x7b, 16, 5},
      {0x7c, 39, 11}, {0x7d, 11, 5}, {0x7e, 10, 4}, {0x7f, 3, 2},
      {0x80, 4452, 121}, {0x81, 961, 71}, {0x82, 1139, 71}, {0x83, 317, 37},
      {0x84, 1411, 79}, {0x85, 267, 43}, {0x86, 461, 41}, {0x87, 105, 19},
      {0x88, 1787, 85}, {0x89, 433, 48}, {0x8a, 388, 45}, {0x8b, 130, 22},
      {0x8c, 463, 50}, {0x8d, 98, 26}, {0x8e, 112, 21}, {0x8f, 29, 9},
      {0x90, 1568, 80}, {0x91, 391, 46}, {0x92, 475, 49}, {0x93, 150, 27},
      {0x94, 560, 52}, {0x95, 124, 26}, {0x96, 211, 30}, {0x97, 55, 14},
      {0x98, 512, 49}, {0x99, 161, 27}, {0x9a, 124, 25}, {0x9b, 50, 13},
      {0x9c, 141, 28}, {0x9d, 37, 13}, {0x9e, 35, 12}, {0x9f, 10, 5},
      {0xa0, 1244, 71}, {0xa1, 336, 43}, {0xa2, 412, 44}, {0xa3, 133, 25},
      {0xa4, 476, 49}, {0xa5, 117, 27}, {0xa6, 186, 28}, {0xa7, 50, 14},
      {0xa8, 580, 52}, {0xa9, 170, 31}, {0xaa, 170, 29}, {0xab, 62, 16},
      {0xac, 195, 32}, {0xad, 50, 17}, {0xae, 58, 15}, {0xaf, 16, 7},
      {0xb0, 377, 41}, {0xb1, 127, 24}, {0xb2, 146, 27}, {0xb3, 57, 16},
      {0xb4, 169, 28}, {0xb5, 51, 14}, {0xb6, 75, 18}, {0xb7, 25, 9},
      {0xb8, 139, 26}, {0xb9, 54, 15}, {0xba, 43, 14}, {0xbb, 19, 8},
      {0xbc, 50, 15}, {0xbd, 15, 7}, {0xbe, 14, 7}, {0xbf, 4, 3},
      {0xc0, 924, 52}, {0xc1, 239, 30}, {0xc2, 260, 34}, {0xc3, 86, 19},
      {0xc4, 315, 36}, {0xc5, 76, 19}, {0xc6, 116, 22}, {0xc7, 34, 11},
      {0xc8, 390, 39}, {0xc9, 112, 23}, {0xca, 99, 23}, {0xcb, 40, 13},
      {0xcc, 119, 24}, {0xcd, 32, 13}, {0xce, 36, 12}, {0xcf, 12, 6},
      {0xd0, 319, 36}, {0xd1, 99, 22}, {0xd2, 122, 21}, {0xd3, 45, 13},
      {0xd4, 133, 26}, {0xd5, 39, 14}, {0xd6, 61, 15}, {0xd7, 20, 8},
      {0xd8, 121, 24}, {0xd9, 47, 15}, {0xda, 40, 11}, {0xdb, 19, 7},
      {0xdc, 43, 15}, {0xdd, 15, 8}, {0xde, 14, 6}, {0xdf, 5, 3},
      {0xe0, 224, 28}, {0xe1, 71, 16}, {0xe2, 77, 18}, {0xe3, 30, 11},
      {0xe4, 87, 20}, {0xe5, 27, 10}, {0xe6, 38, 13}, {0xe7, 14, 7},
      {0xe8, 101, 21}, {0xe9, 36, 13}, {0xea, 34, 12}, {0xeb, 16, 8},
      {0xec, 39, 13}, {0xed, 13, 7}, {0xee, 15, 7}, {0xef, 6, 4},
      {0xf0, 66, 17}, {0xf1, 26, 10}, {0xf2, 29, 9}, {0xf3, 13, 6},
      {0xf4, 31, 12}, {0xf5, 12, 6}, {0xf6, 16, 7}, {0xf7, 7, 4},
      {0xf8, 25, 11}, {0xf9, 12, 7}, {0xfa, 9, 4}, {0xfb, 5, 3},
      {0xfc, 10, 6}, {0xfd, 4, 3}, {0xfe, 3, 2}, {0xff, 1, 1},
  }};
  return table;
}

}  // namespace golden

/// Golden table for `t`, if one exists.
inline std::optional<GoldenTable> golden_table(SimpleType t) {
  switch (t.kind) {
    case Kind::G: return golden::g2();
    case Kind::F: return golden::f4();
    case Kind::E:
      if (t.rank == 6) return golden::e6();
      if (t.rank == 7) return golden::e7();
      return golden::e8();
    default: return std::nullopt;
  }
}

inline std::vector<SimpleType> golden_types() {
  return {{Kind::G, 2}, {Kind::F, 4}, {Kind::E, 6}, {Kind::E, 7}, {Kind::E, 8}};
}

}  // namespace adnil
