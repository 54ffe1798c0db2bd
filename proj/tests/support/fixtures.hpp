#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "curveta/cluster.hpp"
#include "curveta/divisor.hpp"

namespace testsupport {

/// Branch (y^2 - x^3)^2 - x^5 y: O; p1 free on O; p2 on O and p1; p3 free on p2; p4 on p2 and p3.
inline curveta::ClusterPtr two_pair_cluster() { return curveta::make_cluster({{}, {0}, {0, 1}, {2}, {2, 3}}); }

/// Log resolution of ((y^2 - x^3)^3, x^3 (y^2 - x^3)^2, x^6 y^3).
inline curveta::ClusterPtr cusp_ideal_cluster() {
  return curveta::make_cluster({{}, {0}, {0, 1}, {2}, {3}, {3, 4}});
}

inline curveta::IntVec cusp_ideal_f() { return {6, 9, 18, 20, 21, 42}; }

/// Splits "a, b(c, d), e" at top-level commas.
inline std::vector<std::string> split_top(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

struct TableRow {
  const char* key;
  const char* ideal;
};

/// Jumping numbers below one and their multiplier ideals, as published.
inline const std::vector<TableRow>& published_jumps() {
  static const std::vector<TableRow> rows = {
      {"5/18", "x, y"},
      {"7/18", "y, x^2"},
      {"4/9", "x^2, xy, y^2"},
      {"1/2", "xy, y^2, x^3"},
      {"23/42", "y^2, x^3, x^2y"},
      {"25/42", "y^2 - x^3, x^2y, xy^2, x^4"},
      {"11/18", "x^2y, xy^2, y^3, x^4"},
      {"9/14", "xy^2, y^3, x^4, x^3y"},
      {"29/42", "x(y^2 - x^3), y(y^2 - x^3), x^3y, x^2y^2, x^5"},
      {"13/18", "y^3, x^3y, x^2y^2, x^5"},
      {"31/42", "y(y^2 - x^3), x^2y^2, xy^3, x^2(y^2 - x^3), x^4y"},
      {"7/9", "x^2y^2, xy^3, y^4, x^5, x^4y"},
      {"11/14", "x^2(y^2 - x^3), xy(y^2 - x^3), y^2(y^2 - x^3), x^4y, x^3y^2, x^6"},
      {"5/6", "xy(y^2 - x^3), y^2(y^2 - x^3), x^3(y^2 - x^3), x^3y^2, x^2y^3, x^5y"},
      {"37/42", "xy(y^2 - x^3), y^2(y^2 - x^3), x^3(y^2 - x^3), x^2y^3, xy^4, x^5y, x^4y^2, x^7"},
      {"8/9", "y^2(y^2 - x^3), x^5y, x^3(y^2 - x^3), x^2y^3, x^2y(y^2 - x^3), xy^4, x^4y^2, x^7"},
      {"13/14", "y^2(y^2 - x^3), x^3(y^2 - x^3), x^2y(y^2 - x^3), xy^4, y^5, x^4y^2, x^3y^3, x^7, x^6y"},
      {"17/18", "x^2y(y^2 - x^3), xy^2(y^2 - x^3), y^3(y^2 - x^3), x^4y^2, x^4(y^2 - x^3), x^3y^3, x^6y"},
      {"41/42", "x^2y(y^2 - x^3), xy^2(y^2 - x^3), y^3(y^2 - x^3), x^4(y^2 - x^3), x^3y^3, x^2y^4, x^6y, x^5y^2, x^8"},
  };
  return rows;
}

/// Valuation filtration of (y^2 - x^3)^2 - x^5 y, rows i = 1..26, as published.
inline const std::vector<TableRow>& published_filtration() {
  static const std::vector<TableRow> rows = {
      {"1", "x,y"},
      {"2", "x,y"},
      {"3", "x,y"},
      {"4", "x,y"},
      {"5", "y,x^2"},
      {"6", "y,x^2"},
      {"7", "xy,x^2,y^2"},
      {"8", "xy,x^2,y^2"},
      {"9", "xy,y^2,x^3"},
      {"10", "xy,y^2,x^3"},
      {"11", "x^2y,y^2,x^3"},
      {"12", "x^2y,y^2,x^3"},
      {"13", "y^2 - x^3,x^2y,xy^2,x^4"},
      {"14", "x^2y,xy^2,y^3,x^4"},
      {"15", "xy^2,y^3,x^4,x^3y"},
      {"16", "xy^2,y^3,x^4,x^3y"},
      {"17", "x(y^2 - x^3),y(y^2 - x^3),x^3y,x^2y^2,x^5"},
      {"18", "y^3,x^3y,x^2y^2,x^5"},
      {"19", "y(y^2 - x^3),x^2(y^2 - x^3),x^4y,x^2y^2,xy^3"},
      {"20", "x^4y,x^2y^2,xy^3,y^4,x^5"},
      {"21", "x^2(y^2 - x^3),xy(y^2 - x^3),y^2(y^2 - x^3),x^4y,x^3y^2,x^6"},
      {"22", "xy^3,y^4,x^4y,x^3y^2,x^6"},
      {"23", "xy(y^2 - x^3),y^2(y^2 - x^3),x^3y^2,x^3(y^2 - x^3),x^2y^3,x^5y"},
      {"24", "y^4,x^3y^2,x^2y^3,x^6,x^5y"},
      {"25", "(y^2 - x^3)^2,x^3(y^2 - x^3),x^2y(y^2 - x^3),x^5y,x^4y^2,x^7"},
      {"26", "(y^2 - x^3)^2,x^2y^3,xy^4,x^5y,x^4y^2,x^7"},
  };
  return rows;
}

}  // namespace testsupport
