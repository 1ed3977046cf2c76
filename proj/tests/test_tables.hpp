// Hand-written tables for small groups used across the unit tests.
#pragma once

#include <string>

#include "exceptcheck/chartable.hpp"

namespace ec::testdata {

// Cyclic group of order 3, distinguished rep = a nontrivial linear character.
inline const char* kC3 = R"({
  "group_name": "C3",
  "order": 3,
  "is_simple_modulo_center": false,
  "center_in_commutator": false,
  "primitive": false,
  "distinguished_rep": "w",
  "classes": [
    {"size": 1, "element_order": 1, "power_maps": {"2": 0, "3": 0, "5": 0, "7": 0, "11": 0}},
    {"size": 1, "element_order": 3, "power_maps": {"2": 2, "3": 0, "5": 2, "7": 1, "11": 2}},
    {"size": 1, "element_order": 3, "power_maps": {"2": 1, "3": 0, "5": 1, "7": 2, "11": 1}}
  ],
  "irreducibles": [
    {"name": "1", "degree": 1, "values": ["1", "1", "1"]},
    {"name": "w", "degree": 1, "values": ["1", "z3", "z3^2"]},
    {"name": "wb", "degree": 1, "values": ["1", "z3^2", "z3"]}
  ]
})";

// Symmetric group S3, distinguished rep = the 2-dimensional standard one.
inline const char* kS3 = R"({
  "group_name": "S3",
  "order": 6,
  "is_simple_modulo_center": false,
  "center_in_commutator": false,
  "primitive": false,
  "distinguished_rep": "std",
  "classes": [
    {"size": 1, "element_order": 1, "power_maps": {"2": 0, "3": 0, "5": 0, "7": 0, "11": 0}},
    {"size": 3, "element_order": 2, "power_maps": {"2": 0, "3": 1, "5": 1, "7": 1, "11": 1}},
    {"size": 2, "element_order": 3, "power_maps": {"2": 2, "3": 0, "5": 2, "7": 2, "11": 2}}
  ],
  "irreducibles": [
    {"name": "triv", "degree": 1, "values": ["1", "1", "1"]},
    {"name": "sgn", "degree": 1, "values": ["1", "-1", "1"]},
    {"name": "std", "degree": 2, "values": ["2", "0", "-1"]}
  ]
})";

// Quaternion group Q8 in its 2-dimensional symplectic representation.
inline const char* kQ8 = R"({
  "group_name": "Q8",
  "order": 8,
  "is_simple_modulo_center": false,
  "center_in_commutator": true,
  "primitive": false,
  "distinguished_rep": "X2",
  "classes": [
    {"size": 1, "element_order": 1, "power_maps": {"2": 0, "3": 0, "5": 0, "7": 0, "11": 0}},
    {"size": 1, "element_order": 2, "power_maps": {"2": 0, "3": 1, "5": 1, "7": 1, "11": 1}},
    {"size": 2, "element_order": 4, "power_maps": {"2": 1, "3": 2, "5": 2, "7": 2, "11": 2}},
    {"size": 2, "element_order": 4, "power_maps": {"2": 1, "3": 3, "5": 3, "7": 3, "11": 3}},
    {"size": 2, "element_order": 4, "power_maps": {"2": 1, "3": 4, "5": 4, "7": 4, "11": 4}}
  ],
  "irreducibles": [
    {"name": "triv", "degree": 1, "values": ["1", "1", "1", "1", "1"]},
    {"name": "a", "degree": 1, "values": ["1", "1", "1", "-1", "-1"]},
    {"name": "b", "degree": 1, "values": ["1", "1", "-1", "1", "-1"]},
    {"name": "c", "degree": 1, "values": ["1", "1", "-1", "-1", "1"]},
    {"name": "X2", "degree": 2, "values": ["2", "-2", "0", "0", "0"]}
  ]
})";

inline CharacterTable c3() { return parse_table(kC3, "C3"); }
inline CharacterTable s3() { return parse_table(kS3, "S3"); }
inline CharacterTable q8() { return parse_table(kQ8, "Q8"); }

}  // namespace ec::testdata
