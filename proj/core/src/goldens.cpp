#include "crystk/assembly.hpp"

namespace crystk {
namespace goldens {

// Versioned transcriptions of the published result tables.  Any correction
// here is a reviewed data change, never a code change.
//
// Conventions: points and directions are comma-separated rationals; cell
// entries are [dim, [points...], exact-group-name-or-null, iso-type]; line
// entries are [offset, direction, strict-stabilizer-name]; K-groups use the
// KExpr renderer syntax.
const std::string& json_text()
{
    static const std::string text = R"GOLD(
{
  "version": 1,
  "table3": {
    "counts": [21, 19, 8, 4, 13, 5, 3],
    "maximal": ["S4+x(-1)_1", "S4+x(-1)_2", "S4+x(-1)_3", "D2+x(-1)_4",
                "D6+x(-1)_5", "D3+x(-1)_6", "D3+x(-1)_7"],
    "labels": [
      "S4+x(-1)_1", "S4+_1", "S'_4_1", "A4+x(-1)_1", "A4+_1", "D4''_1",
      "D4+x(-1)_1", "D4+_1", "C'_2_1", "D2+x(-1)_1", "D2+_1", "C'_4_1",
      "C4+x(-1)_1", "C4+_1", "D'_2_1", "C2+x(-1)_1", "C2+_1", "D'_4_1",
      "C1+x(-1)_1", "C1+_1", "Dhat'_4_1",
      "S4+x(-1)_2", "S4+_2", "S'_4_2", "A4+x(-1)_2", "A4+_2", "D4''_2",
      "D4+x(-1)_2", "D4+_2", "C'_2_2", "D2+x(-1)_2", "D2+_2", "C'_4_2",
      "C4+x(-1)_2", "C4+_2", "D'_2_2", "C2+x(-1)_2", "C2+_2", "D'_4_2",
      "Dhat'_4_2",
      "S4+x(-1)_3", "S4+_3", "S'_4_3", "A4+x(-1)_3", "A4+_3", "D'_2_3",
      "D2+x(-1)_3", "D2+_3",
      "D2+x(-1)_4", "D2+_4", "D'_2_4", "D'_2_2_4",
      "D6+x(-1)_5", "D6+_5", "C'_6_5", "C6+x(-1)_5", "D'_6_5", "C6+_5",
      "D3+x(-1)_5", "Dhat'_6_5", "C3+_5", "C3+x(-1)_5", "D'_3_5", "D3+_5",
      "D6''_5",
      "D3+x(-1)_6", "D3+_6", "D'_3_6", "C3+x(-1)_6", "C3+_6",
      "D3+x(-1)_7", "D3+_7", "D'_3_7"
    ]
  },
  "table4": {
    "Z/6":       ["Z", "0", "0"],
    "Z/4 x Z/2": ["0", "Z/2", "0"],
    "Z/6 x Z/2": ["Z^3", "(Z/2)^2", "0"],
    "D2 x Z/2":  ["0", "Z/2", "0"],
    "D6":        ["Z", "0", "0"],
    "D4 x Z/2":  ["0", "Z/4", "0"],
    "D6 x Z/2":  ["Z^3", "(Z/2)^2", "0"],
    "A4 x Z/2":  ["Z", "Z/2", "0"],
    "S4 x Z/2":  ["Z", "Z/4", "0"]
  },
  "cells": {
    "S4+x(-1)_1": [
      [0, ["0,0,0"], "S4+x(-1)", "S4 x Z/2"],
      [0, ["1/2,1/2,1/2"], "S4+x(-1)", "S4 x Z/2"],
      [0, ["1/2,0,0"], "D4+_1x(-1)", "D4 x Z/2"],
      [0, ["1/2,1/2,0"], "D4+x(-1)", "D4 x Z/2"]
    ],
    "A4+x(-1)_1": [
      [0, ["0,0,0"], "A4+x(-1)", "A4 x Z/2"],
      [0, ["1/2,1/2,1/2"], "A4+x(-1)", "A4 x Z/2"],
      [0, ["1/2,0,0"], "D2+x(-1)", "D2 x Z/2"],
      [0, ["1/2,1/2,0"], "D2+x(-1)", "D2 x Z/2"]
    ],
    "D4+x(-1)_1": [
      [0, ["0,0,0"], "D4+x(-1)", "D4 x Z/2"],
      [0, ["1/2,1/2,1/2"], "D4+x(-1)", "D4 x Z/2"],
      [0, ["0,0,1/2"], "D4+x(-1)", "D4 x Z/2"],
      [0, ["1/2,1/2,0"], "D4+x(-1)", "D4 x Z/2"],
      [0, ["1/2,0,0"], "D2+x(-1)", "D2 x Z/2"],
      [0, ["0,1/2,1/2"], "D2+x(-1)", "D2 x Z/2"]
    ],
    "D2+x(-1)_1": [
      [0, ["0,0,0"], "D2+x(-1)", "D2 x Z/2"],
      [0, ["1/2,0,0"], "D2+x(-1)", "D2 x Z/2"],
      [0, ["0,1/2,0"], "D2+x(-1)", "D2 x Z/2"],
      [0, ["0,0,1/2"], "D2+x(-1)", "D2 x Z/2"],
      [0, ["1/2,1/2,0"], "D2+x(-1)", "D2 x Z/2"],
      [0, ["1/2,0,1/2"], "D2+x(-1)", "D2 x Z/2"],
      [0, ["0,1/2,1/2"], "D2+x(-1)", "D2 x Z/2"],
      [0, ["1/2,1/2,1/2"], "D2+x(-1)", "D2 x Z/2"]
    ],
    "C4+x(-1)_1": [
      [0, ["0,0,0"], "C4+x(-1)", "Z/4 x Z/2"],
      [0, ["1/2,1/2,1/2"], "C4+x(-1)", "Z/4 x Z/2"],
      [0, ["0,0,1/2"], "C4+x(-1)", "Z/4 x Z/2"],
      [0, ["1/2,1/2,0"], "C4+x(-1)", "Z/4 x Z/2"]
    ],
    "S4+x(-1)_2": [
      [0, ["0,0,0"], "S4+x(-1)", "S4 x Z/2"],
      [0, ["1/2,0,0"], "D4+_1x(-1)", "D4 x Z/2"],
      [0, ["1/4,1/4,1/4"], "D3+x(-1)", "D6"]
    ],
    "A4+x(-1)_2": [
      [0, ["0,0,0"], "A4+x(-1)", "A4 x Z/2"],
      [0, ["1/2,0,0"], "D2+x(-1)", "D2 x Z/2"],
      [0, ["1/4,1/4,1/4"], "C3+x(-1)", "Z/6"]
    ],
    "D4+x(-1)_2": [
      [0, ["0,0,0"], "D4+x(-1)", "D4 x Z/2"],
      [0, ["0,0,1/2"], "D4+x(-1)", "D4 x Z/2"],
      [0, ["1/2,0,0"], "D2+x(-1)", "D2 x Z/2"]
    ],
    "D2+x(-1)_2": [
      [0, ["0,0,0"], "D2+x(-1)", "D2 x Z/2"],
      [0, ["1/2,0,0"], "D2+x(-1)", "D2 x Z/2"],
      [0, ["0,1/2,0"], "D2+x(-1)", "D2 x Z/2"],
      [0, ["0,0,1/2"], "D2+x(-1)", "D2 x Z/2"]
    ],
    "C4+x(-1)_2": [
      [0, ["0,0,0"], "C4+x(-1)", "Z/4 x Z/2"],
      [0, ["0,0,1/2"], "C4+x(-1)", "Z/4 x Z/2"]
    ],
    "S4+x(-1)_3": [
      [0, ["0,0,0"], "S4+x(-1)", "S4 x Z/2"],
      [0, ["1/2,0,0"], "S4+x(-1)", "S4 x Z/2"],
      [0, ["1/4,1/4,0"], "<A,C>x(-1)", "D2 x Z/2"]
    ],
    "A4+x(-1)_3": [
      [0, ["0,0,0"], "A4+x(-1)", "A4 x Z/2"],
      [0, ["1/2,0,0"], "A4+x(-1)", "A4 x Z/2"]
    ],
    "D2+x(-1)_3": [
      [0, ["0,0,0"], "D2+x(-1)", "D2 x Z/2"],
      [0, ["1/2,0,0"], "D2+x(-1)", "D2 x Z/2"]
    ],
    "D2+x(-1)_4": [
      [0, ["0,0,0"], "D2+x(-1)", "D2 x Z/2"],
      [0, ["0,1/2,1/2"], "D2+x(-1)", "D2 x Z/2"],
      [0, ["0,0,1/2"], "D2+x(-1)", "D2 x Z/2"],
      [0, ["0,1/2,0"], "D2+x(-1)", "D2 x Z/2"]
    ],
    "D6+x(-1)_5": [
      [0, ["0,0,0"], "D6+x(-1)", "D6 x Z/2"],
      [0, ["1/2,1/2,1/2"], "D6+x(-1)", "D6 x Z/2"],
      [0, ["1/2,0,1"], null, "D2 x Z/2"],
      [0, ["0,-1/2,1/2"], null, "D2 x Z/2"],
      [0, ["1/3,-2/3,1/3"], "D'_6", "D6"],
      [0, ["5/6,-1/6,5/6"], "D'_6", "D6"],
      [1, ["0,0,0", "1/2,1/2,1/2"], "D6''", "D6"]
    ],
    "D'_6_5": [
      [0, ["0,0,0"], "D'_6", "D6"],
      [0, ["1/2,1/2,1/2"], "D'_6", "D6"],
      [0, ["1/3,-2/3,1/3"], "D'_6", "D6"],
      [0, ["5/6,-1/6,5/6"], "D'_6", "D6"],
      [0, ["-1/3,2/3,-1/3"], "D'_6", "D6"],
      [0, ["-5/6,1/6,-5/6"], "D'_6", "D6"]
    ],
    "D6''_5": [
      [0, ["0,0,0"], "D6''", "D6"],
      [0, ["1/2,1/2,1/2"], "D6''", "D6"],
      [1, ["0,0,0", "1/2,1/2,1/2"], "D6''", "D6"],
      [1, ["0,0,0", "-1/2,-1/2,-1/2"], "D6''", "D6"]
    ],
    "Dhat'_6_5": [
      [0, ["0,0,0"], "Dhat'_6", "D6"],
      [0, ["1/2,1/2,1/2"], "Dhat'_6", "D6"],
      [0, ["1/3,-2/3,1/3"], "C'_6", "Z/6"],
      [0, ["5/6,-1/6,5/6"], "C'_6", "Z/6"]
    ],
    "C6+x(-1)_5": [
      [0, ["0,0,0"], "C6+x(-1)", "Z/6 x Z/2"],
      [0, ["1/2,1/2,1/2"], "C6+x(-1)", "Z/6 x Z/2"],
      [0, ["1/3,-2/3,1/3"], "C'_6", "Z/6"],
      [0, ["5/6,-1/6,5/6"], "C'_6", "Z/6"],
      [1, ["0,0,0", "1/2,1/2,1/2"], "C6+", "Z/6"]
    ],
    "D6+_5": [
      [0, ["0,0,0"], "D6+", "D6"],
      [0, ["1/2,1/2,1/2"], "D6+", "D6"],
      [1, ["0,0,0", "1/2,1/2,1/2"], "C6+", "Z/6"]
    ],
    "D3+x(-1)_5": [
      [0, ["0,0,0"], "D3+x(-1)", "D6"],
      [0, ["1/2,1/2,1/2"], "D3+x(-1)", "D6"]
    ],
    "C6+_5": [
      [0, ["0,0,0"], "C6+", "Z/6"],
      [0, ["1/2,1/2,1/2"], "C6+", "Z/6"],
      [1, ["0,0,0", "1/2,1/2,1/2"], "C6+", "Z/6"],
      [1, ["0,0,0", "-1/2,-1/2,-1/2"], "C6+", "Z/6"]
    ],
    "C'_6_5": [
      [0, ["0,0,0"], "C'_6", "Z/6"],
      [0, ["1/2,1/2,1/2"], "C'_6", "Z/6"],
      [0, ["1/3,-2/3,1/3"], "C'_6", "Z/6"],
      [0, ["5/6,-1/6,5/6"], "C'_6", "Z/6"],
      [0, ["-1/3,2/3,-1/3"], "C'_6", "Z/6"],
      [0, ["-5/6,1/6,-5/6"], "C'_6", "Z/6"]
    ],
    "C3+x(-1)_5": [
      [0, ["0,0,0"], "C3+x(-1)", "Z/6"],
      [0, ["1/2,1/2,1/2"], "C3+x(-1)", "Z/6"]
    ],
    "D3+x(-1)_6": [
      [0, ["0,0,0"], "D3+x(-1)", "D6"],
      [0, ["5/6,-1/6,-1/6"], "D3+x(-1)", "D6"]
    ],
    "C3+x(-1)_6": [
      [0, ["0,0,0"], "C3+x(-1)", "Z/6"],
      [0, ["5/6,-1/6,-1/6"], "C3+x(-1)", "Z/6"]
    ],
    "D3+x(-1)_7": [
      [0, ["0,0,0"], "D3+x(-1)", "D6"],
      [0, ["1/2,1/2,1/2"], "D3+x(-1)", "D6"]
    ]
  },
  "table12": {
    "S4+x(-1)_1": ["Z^2", "(Z/4)^4"],
    "A4+x(-1)_1": ["Z^2", "(Z/2)^4"],
    "D4+x(-1)_1": ["0", "(Z/2)^2 + (Z/4)^4"],
    "D2+x(-1)_1": ["0", "(Z/2)^8"],
    "C4+x(-1)_1": ["0", "(Z/2)^4"],
    "S4+x(-1)_2": ["Z^2", "(Z/4)^2"],
    "A4+x(-1)_2": ["Z^2", "(Z/2)^2"],
    "D4+x(-1)_2": ["0", "Z/2 + (Z/4)^2"],
    "D2+x(-1)_2": ["0", "(Z/2)^4"],
    "C4+x(-1)_2": ["0", "(Z/2)^2"],
    "S4+x(-1)_3": ["Z^2", "Z/2 + (Z/4)^2"],
    "A4+x(-1)_3": ["Z^2", "(Z/2)^2"],
    "D2+x(-1)_3": ["0", "(Z/2)^2"],
    "D2+x(-1)_4": ["0", "(Z/2)^4"],
    "D6+x(-1)_5": ["Z^7", "(Z/2)^6"],
    "D6+_5": ["Z", "0"],
    "C'_6_5": ["Z^6", "0"],
    "C6+x(-1)_5": ["Z^7", "(Z/2)^4"],
    "D'_6_5": ["Z^6", "0"],
    "C6+_5": ["Z", "Z"],
    "D3+x(-1)_5": ["Z^2", "0"],
    "Dhat'_6_5": ["Z^4", "0"],
    "C3+x(-1)_5": ["Z^2", "0"],
    "D6''_5": ["Z", "Z"],
    "D3+x(-1)_6": ["Z^2", "0"],
    "C3+x(-1)_6": ["Z^2", "0"],
    "D3+x(-1)_7": ["Z^2", "0"]
  },
  "lines": {
    "S4+x(-1)_1": [
      ["0,0,0", "0,0,1", "D4''"],
      ["1/2,1/2,0", "0,0,1", "D4''"],
      ["1/2,0,0", "0,0,1", "D'_2"],
      ["0,0,0", "1,1,0", "<A,B>"],
      ["0,0,1/2", "1,1,0", "<A,B>"]
    ],
    "S4+_1": [
      ["0,0,0", "0,0,1", "C4+"],
      ["1/2,1/2,0", "0,0,1", "C4+"]
    ],
    "S'_4_1": [
      ["0,0,0", "0,0,1", "<A,C>"],
      ["1/2,1/2,0", "0,0,1", "<A,C>"]
    ],
    "A4+x(-1)_1": [
      ["0,0,0", "0,0,1", "D'_2"],
      ["1/2,0,0", "0,0,1", "D'_2"],
      ["0,1/2,0", "0,0,1", "D'_2"],
      ["1/2,1/2,0", "0,0,1", "D'_2"]
    ],
    "D4+x(-1)_1": [
      ["0,0,0", "0,0,1", "D4''"],
      ["1/2,1/2,0", "0,0,1", "D4''"],
      ["1/2,0,0", "0,0,1", "D'_2"],
      ["0,0,0", "1,0,0", "D'_2_1"],
      ["0,1/2,0", "1,0,0", "D'_2_1"],
      ["0,1/2,1/2", "1,0,0", "D'_2_1"],
      ["0,0,1/2", "0,1,0", "D'_2_2"],
      ["0,0,0", "1,1,0", "<A,B>"],
      ["0,0,1/2", "1,1,0", "<A,B>"]
    ],
    "D4+_1": [
      ["0,0,0", "0,0,1", "C4+"],
      ["1/2,1/2,0", "0,0,1", "C4+"]
    ],
    "C4+x(-1)_1": [
      ["0,0,0", "0,0,1", "C4+"],
      ["1/2,1/2,0", "0,0,1", "C4+"]
    ],
    "C4+_1": [
      ["0,0,0", "0,0,1", "C4+"],
      ["1/2,1/2,0", "0,0,1", "C4+"]
    ],
    "D2+x(-1)_1": [
      ["0,0,0", "0,0,1", "D'_2"],
      ["0,1/2,0", "0,0,1", "D'_2"],
      ["1/2,1/2,0", "0,0,1", "D'_2"],
      ["1/2,0,0", "0,0,1", "D'_2"],
      ["0,0,0", "1,0,0", "D'_2_1"],
      ["0,1/2,0", "1,0,0", "D'_2_1"],
      ["0,0,1/2", "1,0,0", "D'_2_1"],
      ["0,1/2,1/2", "1,0,0", "D'_2_1"],
      ["0,0,0", "0,1,0", "D'_2_2"],
      ["0,0,1/2", "0,1,0", "D'_2_2"],
      ["1/2,0,0", "0,1,0", "D'_2_2"],
      ["1/2,0,1/2", "0,1,0", "D'_2_2"]
    ],
    "D'_2_1": [
      ["0,0,0", "0,0,1", "D'_2"],
      ["1/2,0,0", "0,0,1", "D'_2"],
      ["0,1/2,0", "0,0,1", "D'_2"],
      ["1/2,1/2,0", "0,0,1", "D'_2"]
    ],
    "D'_4_1": [
      ["0,0,0", "0,0,1", "<A,C>"],
      ["1/2,1/2,0", "0,0,1", "<A,C>"]
    ],
    "Dhat'_4_1": [
      ["0,0,0", "0,0,1", "D'_2"],
      ["1/2,1/2,0", "0,0,1", "D'_2"],
      ["1/2,0,0", "0,0,1", "D'_2"]
    ],
    "D4''_1": [
      ["0,0,0", "0,0,1", "D4''"],
      ["1/2,1/2,0", "0,0,1", "D4''"],
      ["1/2,0,0", "0,0,1", "D'_2"]
    ],
    "S4+x(-1)_2": [
      ["0,0,0", "0,0,1", "D4''"],
      ["1/2,0,0", "0,0,1", "D'_2"],
      ["0,0,0", "1,1,0", "<A,B>"]
    ],
    "S'_4_2": [["0,0,0", "0,0,1", "<A,C>"]],
    "A4+x(-1)_2": [
      ["0,0,0", "0,0,1", "D'_2"],
      ["1/2,0,0", "0,0,1", "D'_2"]
    ],
    "D4''_2": [
      ["0,0,0", "0,0,1", "D4''"],
      ["1/2,0,0", "0,0,1", "D'_2"]
    ],
    "S4+_2": [["0,0,0", "0,0,1", "C4+"]],
    "D4+x(-1)_2": [
      ["0,0,0", "0,0,1", "D4''"],
      ["1/2,0,0", "0,0,1", "D'_2"],
      ["0,0,1/2", "0,1,0", "D'_2_2"],
      ["0,0,0", "0,1,0", "D'_2_2"],
      ["0,0,0", "1,1,0", "<A,B>"]
    ],
    "D4+_2": [["0,0,0", "0,0,1", "C4+"]],
    "C4+x(-1)_2": [["0,0,0", "0,0,1", "C4+"]],
    "C4+_2": [["0,0,0", "0,0,1", "C4+"]],
    "D2+x(-1)_2": [
      ["0,0,0", "0,0,1", "D'_2"],
      ["1/2,0,0", "0,0,1", "D'_2"],
      ["0,0,0", "1,0,0", "D'_2_1"],
      ["0,1/2,0", "1,0,0", "D'_2_1"],
      ["0,0,0", "0,1,0", "D'_2_2"],
      ["0,0,1/2", "0,1,0", "D'_2_2"]
    ],
    "D'_4_2": [["0,0,0", "0,0,1", "<A,C>"]],
    "Dhat'_4_2": [
      ["0,0,0", "0,0,1", "D'_2"],
      ["1/2,0,0", "0,0,1", "D'_2"]
    ],
    "D'_2_2": [
      ["0,0,0", "0,0,1", "D'_2"],
      ["1/2,0,0", "0,0,1", "D'_2"]
    ],
    "S4+x(-1)_3": [
      ["0,0,0", "0,0,1", "D4''"],
      ["0,0,0", "1,1,0", "<A,B>"],
      ["0,0,1/2", "1,1,0", "<A,B>"],
      ["1/4,1/4,0", "0,0,1", "<A,C>"]
    ],
    "S4+_3": [["0,0,0", "0,0,1", "C4+"]],
    "S'_4_3": [
      ["0,0,0", "0,0,1", "<A,C>"],
      ["1/4,1/4,0", "0,0,1", "<A,C>"]
    ],
    "A4+x(-1)_3": [["0,0,0", "0,0,1", "D'_2"]],
    "D'_2_3": [["0,0,0", "0,0,1", "D'_2"]],
    "D2+x(-1)_3": [
      ["0,0,0", "0,0,1", "D'_2"],
      ["0,0,0", "1,0,0", "D'_2_1"],
      ["0,0,0", "0,1,0", "D'_2_2"]
    ],
    "D2+x(-1)_4": [
      ["0,0,0", "0,0,1", "D'_2"],
      ["0,1/2,0", "0,0,1", "D'_2"],
      ["0,0,0", "1,0,0", "D'_2_1"],
      ["0,1/2,0", "1,0,0", "D'_2_1"],
      ["0,0,0", "0,1,0", "D'_2_2"],
      ["0,0,1/2", "0,1,0", "D'_2_2"]
    ],
    "D'_2_4": [
      ["0,0,0", "0,0,1", "D'_2"],
      ["0,1/2,0", "0,0,1", "D'_2"]
    ],
    "D'_2_2_4": [
      ["0,0,0", "0,1,0", "D'_2_2"],
      ["0,0,1/2", "0,1,0", "D'_2_2"]
    ],
    "D6+x(-1)_5": [
      ["0,0,0", "1,1,1", "D6''"],
      ["1/2,-1/2,0", "1,1,1", "<A,D>"],
      ["0,0,0", "1,-1,0", "<D,E>"],
      ["1/2,1/2,1/2", "1,-1,0", "<D,E>"],
      ["0,0,0", "1,-2,1", "<E,F>"],
      ["1/2,1/2,1/2", "1,-2,1", "<E,F>"]
    ],
    "D6''_5": [
      ["0,0,0", "1,1,1", "D6''"],
      ["1/2,-1/2,0", "1,1,1", "<A,D>"]
    ],
    "D'_6_5": [
      ["0,0,0", "1,-2,1", "<E,F>"],
      ["1/2,1/2,1/2", "1,-2,1", "<E,F>"]
    ],
    "Dhat'_6_5": [
      ["0,0,0", "1,-1,0", "<D,E>"],
      ["1/2,1/2,1/2", "1,-1,0", "<D,E>"]
    ]
  },
  "structures": {
    "S4+x(-1)_1": {"D4 x Dinf": 2, "D2 x Dinf": 3},
    "S4+_1": {"D4 *_C4 D4": 2},
    "S'_4_1": {"D4 *_D2 D4": 2},
    "A4+x(-1)_1": {"D2 x Dinf": 4},
    "D4''_1": {"D4 x Z": 2, "D2 x Z": 1},
    "D4+x(-1)_1": {"D4 x Dinf": 2, "D2 x Dinf": 7},
    "D4+_1": {"D4 *_C4 D4": 2},
    "D2+x(-1)_1": {"D2 x Dinf": 12},
    "C4+x(-1)_1": {"C4 x Dinf": 2},
    "C4+_1": {"C4 x Z": 2},
    "D'_2_1": {"D2 x Z": 4},
    "D'_4_1": {"D4 *_D2 D4": 2},
    "Dhat'_4_1": {"D4 *_D2 D4": 2, "D2 x Z": 1},
    "S4+x(-1)_2": {"D4 x Dinf": 1, "D2 x Dinf": 1, "(D2 x Z/2) *_D2 D4": 1},
    "S4+_2": {"D4 *_C4 D4": 1},
    "S'_4_2": {"D4 *_D2 D4": 1},
    "A4+x(-1)_2": {"D2 x Dinf": 2},
    "D4''_2": {"D4 x Z": 1, "D2 : Z": 1},
    "D4+x(-1)_2": {"D4 x Dinf": 1, "D2 x Dinf": 3, "(D2 x Z/2) *_D2 D4": 1},
    "D4+_2": {"D4 *_C4 D4": 1},
    "D2+x(-1)_2": {"D2 x Dinf": 6},
    "C4+x(-1)_2": {"C4 x Dinf": 1},
    "C4+_2": {"C4 x Z": 1},
    "D'_2_2": {"D2 x Z": 2},
    "D'_4_2": {"D4 *_D2 D4": 1},
    "Dhat'_4_2": {"D4 *_D2 D4": 2},
    "S4+x(-1)_3": {"D4 x Dinf": 1, "D2 x Dinf": 2, "(D2 x Z/2) *_D2 D4": 1},
    "S4+_3": {"D4 *_C4 D4": 1},
    "S'_4_3": {"D4 *_D2 D4": 2},
    "A4+x(-1)_3": {"D2 x Dinf": 1},
    "D'_2_3": {"D2 x Z": 1},
    "D2+x(-1)_3": {"D2 x Dinf": 3},
    "D2+x(-1)_4": {"D2 x Dinf": 6},
    "D'_2_4": {"D2 x Z": 2},
    "D'_2_2_4": {"D2 x Z": 2},
    "D6+x(-1)_5": {"D2 x Dinf": 5, "D6 x Dinf": 1},
    "D'_6_5": {"D2 x Z": 2},
    "Dhat'_6_5": {"D2 x Z": 2},
    "D6''_5": {"D2 x Z": 1, "D6 x Z": 1}
  },
  "table13": {
    "C4 x Z": ["inf(Z/2)", "inf(Z/2)"],
    "D2 x Z": ["inf(Z/2)", "inf(Z/2)"],
    "D2 : Z": ["inf(Z/2)", "inf(Z/2)"],
    "D4 x Z": ["inf(Z/2) + inf(Z/4)", "2*NK1(ZD4)"],
    "D6 x Z": ["inf(Z/2)", "2*NK1(ZD6)"],
    "C4 x Dinf": ["inf(Z/2)", "inf(Z/2)"],
    "D2 x Dinf": ["inf(Z/2)", "inf(Z/2)"],
    "D4 *_D2 D4": ["inf(Z/2)", "inf(Z/2)"],
    "D4 *_C4 D4": ["inf(Z/2)", "inf(Z/2)"],
    "(D2 x Z/2) *_D2 D4": ["inf(Z/2)", "inf(Z/2)"],
    "D4 x Dinf": ["inf(Z/2) + inf(Z/4)", "NK1(ZD4)"],
    "D6 x Dinf": ["inf(Z/2)", "NK1(ZD6)"]
  },
  "table14_15": {
    "S4+x(-1)_1": ["Z^2", "(Z/4)^4 + inf(Z/2) + inf(Z/4)", "inf(Z/2) + 2*NK1(ZD4)"],
    "S4+_1": ["0", "inf(Z/2)", "inf(Z/2)"],
    "S'_4_1": ["0", "inf(Z/2)", "inf(Z/2)"],
    "A4+x(-1)_1": ["Z^2", "(Z/2)^4 + inf(Z/2)", "inf(Z/2)"],
    "D4''_1": ["0", "inf(Z/2) + inf(Z/4)", "inf(Z/2) + 4*NK1(ZD4)"],
    "D4+x(-1)_1": ["0", "(Z/2)^2 + (Z/4)^4 + inf(Z/2) + inf(Z/4)", "inf(Z/2) + 2*NK1(ZD4)"],
    "D4+_1": ["0", "inf(Z/2)", "inf(Z/2)"],
    "D2+x(-1)_1": ["0", "(Z/2)^8 + inf(Z/2)", "inf(Z/2)"],
    "C4+x(-1)_1": ["0", "(Z/2)^4 + inf(Z/2)", "inf(Z/2)"],
    "C4+_1": ["0", "inf(Z/2)", "inf(Z/2)"],
    "D'_2_1": ["0", "inf(Z/2)", "inf(Z/2)"],
    "D'_4_1": ["0", "inf(Z/2)", "inf(Z/2)"],
    "Dhat'_4_1": ["0", "inf(Z/2)", "inf(Z/2)"],
    "S4+x(-1)_2": ["Z^2", "(Z/4)^2 + inf(Z/2) + inf(Z/4)", "inf(Z/2) + NK1(ZD4)"],
    "S4+_2": ["0", "inf(Z/2)", "inf(Z/2)"],
    "S'_4_2": ["0", "inf(Z/2)", "inf(Z/2)"],
    "A4+x(-1)_2": ["Z^2", "(Z/2)^2 + inf(Z/2)", "inf(Z/2)"],
    "D4''_2": ["0", "inf(Z/2) + inf(Z/4)", "inf(Z/2) + 2*NK1(ZD4)"],
    "D4+x(-1)_2": ["0", "Z/2 + (Z/4)^2 + inf(Z/2) + inf(Z/4)", "inf(Z/2) + NK1(ZD4)"],
    "D4+_2": ["0", "inf(Z/2)", "inf(Z/2)"],
    "D2+x(-1)_2": ["0", "(Z/2)^4 + inf(Z/2)", "inf(Z/2)"],
    "C4+x(-1)_2": ["0", "(Z/2)^2 + inf(Z/2)", "inf(Z/2)"],
    "C4+_2": ["0", "inf(Z/2)", "inf(Z/2)"],
    "D'_2_2": ["0", "inf(Z/2)", "inf(Z/2)"],
    "D'_4_2": ["0", "inf(Z/2)", "inf(Z/2)"],
    "Dhat'_4_2": ["0", "inf(Z/2)", "inf(Z/2)"],
    "S4+x(-1)_3": ["Z^2", "Z/2 + (Z/4)^2 + inf(Z/2) + inf(Z/4)", "inf(Z/2) + NK1(ZD4)"],
    "S4+_3": ["0", "inf(Z/2)", "inf(Z/2)"],
    "S'_4_3": ["0", "inf(Z/2)", "inf(Z/2)"],
    "A4+x(-1)_3": ["Z^2", "(Z/2)^2 + inf(Z/2)", "inf(Z/2)"],
    "D'_2_3": ["0", "inf(Z/2)", "inf(Z/2)"],
    "D2+x(-1)_3": ["0", "(Z/2)^2 + inf(Z/2)", "inf(Z/2)"],
    "D2+x(-1)_4": ["0", "(Z/2)^4 + inf(Z/2)", "inf(Z/2)"],
    "D'_2_4": ["0", "inf(Z/2)", "inf(Z/2)"],
    "D'_2_2_4": ["0", "inf(Z/2)", "inf(Z/2)"],
    "D6+x(-1)_5": ["Z^7", "(Z/2)^6 + inf(Z/2)", "inf(Z/2) + NK1(ZD6)"],
    "D6+_5": ["Z", "0", "0"],
    "C'_6_5": ["Z^6", "0", "0"],
    "C6+x(-1)_5": ["Z^7", "(Z/2)^4", "0"],
    "D'_6_5": ["Z^6", "inf(Z/2)", "inf(Z/2)"],
    "C6+_5": ["Z", "Z", "0"],
    "D3+x(-1)_5": ["Z^2", "0", "0"],
    "Dhat'_6_5": ["Z^4", "inf(Z/2)", "inf(Z/2)"],
    "C3+x(-1)_5": ["Z^2", "0", "0"],
    "D6''_5": ["Z", "Z + inf(Z/2)", "inf(Z/2) + 2*NK1(ZD6)"],
    "D3+x(-1)_6": ["Z^2", "0", "0"],
    "C3+x(-1)_6": ["Z^2", "0", "0"],
    "D3+x(-1)_7": ["Z^2", "0", "0"]
  }
}
)GOLD";
    return text;
}

} // namespace goldens
} // namespace crystk
