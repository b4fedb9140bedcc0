#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace psl2::reference {

// Subgroup counts by size: all, finite index, cyclically reduced free, free, free finite
// index. Values as published; sizes 1..36.
struct CountRow {
  int n;
  const char* all;
  const char* finite_index;
  const char* cr_free;
  const char* free;
  const char* free_finite_index;
};

inline const std::vector<CountRow>& count_figure() {
  static const std::vector<CountRow> rows = {
      {1, "4", "1", "0", "0", "0"},
      {2, "8", "1", "2", "2", "0"},
      {3, "16", "4", "0", "1", "0"},
      {4, "34", "8", "4", "5", "0"},
      {5, "76", "5", "0", "4", "0"},
      {6, "167", "22", "13", "17", "5"},
      {7, "366", "42", "0", "12", "0"},
      {8, "846", "40", "56", "68", "0"},
      {9, "1870", "120", "0", "37", "0"},
      {10, "4353", "265", "232", "269", "0"},
      {11, "9900", "286", "0", "130", "0"},
      {12, "23054", "764", "924", "1054", "60"},
      {13, "53402", "1729", "0", "492", "0"},
      {14, "125379", "2198", "3768", "4260", "0"},
      {15, "293372", "5168", "0", "1908", "0"},
      {16, "694884", "12144", "15936", "17844", "0"},
      {17, "1641018", "17034", "0", "7584", "0"},
      {18, "3912272", "37702", "68817", "76401", "1105"},
      {19, "9319816", "88958", "0", "31104", "0"},
      {20, "22348358", "136584", "301524", "332628", "0"},
      {21, "53622232", "288270", "0", "131025", "0"},
      {22, "129319050", "682572", "1343388", "1474413", "0"},
      {23, "312184204", "1118996", "0", "563574", "0"},
      {24, "756855652", "2306464", "6087376", "6650950", "27120"},
      {25, "1837195988", "5428800", "0", "2470536", "0"},
      {26, "4475381885", "9409517", "27997712", "30468248", "0"},
      {27, "10918047864", "19103988", "0", "11028448", "0"},
      {28, "26714414272", "44701696", "130532224", "141560672", "0"},
      {29, "65467869902", "80904113", "0", "50054608", "0"},
      {30, "160853707175", "163344502", "616603418", "666658026", "828250"},
      {31, "395841123048", "379249288", "0", "230641440", "0"},
      {32, "976352297396", "711598944", "2949326656", "3179968096", "0"},
      {33, "2411988448210", "1434840718", "0", "1077886298", "0"},
      {34, "5970888317052", "3308997062", "14274174272", "15352060570", "0"},
      {35, "14803858849928", "6391673638", "0", "5105099252", "0"},
      {36, "36772848298022", "12921383032", "69861695744", "74966794996", "30220800"},
  };
  return rows;
}

// Subgroups of index n in the modular group, n = 1..36 (OEIS A005133).
inline const std::vector<std::int64_t>& oeis_a005133() {
  static const std::vector<std::int64_t> v = {
      1,        1,         4,          8,          5,           22,          42,
      40,       120,       265,        286,        764,         1729,        2198,
      5168,     12144,     17034,      37702,      88958,       136584,      288270,
      682572,   1118996,   2306464,    5428800,    9409517,     19103988,    44701696,
      80904113, 163344502, 379249288,  711598944,  1434840718,  3308997062,  6391673638,
      12921383032};
  return v;
}

// Free subgroups of index 6n in the modular group, n = 1..6 (OEIS A062980 shifted).
inline const std::vector<std::int64_t>& oeis_a062980() {
  static const std::vector<std::int64_t> v = {5, 60, 1105, 27120, 828250, 30220800};
  return v;
}

// Appendix tables: rows indexed from the stated starting n.
inline const std::vector<std::vector<std::int64_t>>& t2_rows() {  // n = 2..6
  static const std::vector<std::vector<std::int64_t>> v = {
      {1, 0, 1}, {0, 3, 0, 1}, {3, 0, 6, 0, 1}, {0, 15, 0, 10, 0, 1}, {15, 0, 45, 0, 15, 0, 1}};
  return v;
}

inline const std::vector<std::vector<std::int64_t>>& t3_rows() {  // n = 2..6
  static const std::vector<std::vector<std::int64_t>> v = {{2, 0, 1},
                                                           {2, 6, 0, 1},
                                                           {12, 8, 12, 0, 1},
                                                           {40, 60, 20, 20, 0, 1},
                                                           {160, 240, 180, 40, 30, 0, 1}};
  return v;
}

inline const std::vector<std::vector<std::int64_t>>& gpr_tilde_rows() {  // n = 1..6
  static const std::vector<std::vector<std::int64_t>> v = {
      {0, 0, 1},
      {2, 0, 3, 0, 1},
      {0, 6, 18, 2, 9, 0, 1},
      {36, 24, 108, 48, 87, 8, 18, 0, 1},
      {0, 600, 900, 700, 900, 240, 275, 20, 30, 0, 1},
      {2400, 3600, 9900, 11400, 10950, 5400, 4225, 840, 675, 40, 45, 0, 1}};
  return v;
}

inline const std::vector<std::vector<std::int64_t>>& gpr_rows() {  // n = 1..6, l = 0..6
  static const std::vector<std::vector<std::int64_t>> v = {
      {0, 0, 1, 0, 0, 0, 0},          {2, 0, 3, 0, 0, 0, 0},
      {0, 6, 12, 2, 0, 0, 0},         {24, 24, 72, 24, 0, 0, 0},
      {0, 480, 480, 360, 0, 0, 0},    {1560, 2880, 5760, 4560, 360, 0, 0}};
  return v;
}

// Loop-free sequences at n = 0, 2, 4, ..., 12.
inline const std::vector<std::int64_t>& t2_0_even() {
  static const std::vector<std::int64_t> v = {1, 1, 3, 15, 105, 945, 10395};
  return v;
}
inline const std::vector<std::int64_t>& t3_0_even() {
  static const std::vector<std::int64_t> v = {1, 2, 12, 160, 3920, 131040, 5346880};
  return v;
}
inline const std::vector<std::int64_t>& g0_tilde_even() {
  static const std::vector<std::int64_t> v = {0, 2, 36, 2400, 411600, 123832800, 55580817600};
  return v;
}
inline const std::vector<std::int64_t>& g0_even() {
  static const std::vector<std::int64_t> v = {0, 2, 24, 1560, 282240, 84188160, 36883123200};
  return v;
}

}  // namespace psl2::reference
