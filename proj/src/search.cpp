#include "rouxlab/search.hpp"

#include <algorithm>
#include <stdexcept>

#include "rouxlab/rational.hpp"

namespace rouxlab {

namespace {

std::vector<std::int64_t> divisors_for_policy(std::int64_t n, RPolicy policy) {
  std::vector<std::int64_t> out;
  if (policy == RPolicy::kOddPrimes) {
    std::int64_t m = n;
    while (m % 2 == 0) m /= 2;
    for (std::int64_t p = 3; p * p <= m; p += 2) {
      if (m % p == 0) {
        out.push_back(p);
        while (m % p == 0) m /= p;
      }
    }
    if (m > 1) out.push_back(m);
  } else {
    for (std::int64_t r = 2; r <= n; ++r)
      if (n % r == 0) out.push_back(r);
  }
  return out;
}

}  // namespace

std::vector<FeasibilityRow> drackn_feasible(std::int64_t max_n, RPolicy policy) {
  if (max_n < 3) throw std::invalid_argument("search needs max_n >= 3");
  std::vector<FeasibilityRow> rows;
  for (std::int64_t n = 3; n <= max_n; ++n) {
    auto rs = divisors_for_policy(n, policy);
    if (rs.empty()) continue;
    for (std::int64_t d = 2; d <= n - 2; ++d) {
      if (n > d * d || n > (n - d) * (n - d)) continue;  // Gerzon both ways
      std::int64_t num = (n - 2 * d) * (n - 2 * d) * (n - 1);
      std::int64_t den = d * (n - d);
      if (num % den != 0) continue;
      std::int64_t q = num / den;
      std::int64_t sq = isqrt(q);
      if (sq * sq != q) continue;
      std::int64_t sign = n - 2 * d < 0 ? -1 : 1;  // sign(0) treated as +
      std::int64_t c_num = n - 2 - sign * sq;
      for (std::int64_t r : rs) {
        if (c_num % r != 0) continue;
        std::int64_t c = c_num / r;
        if (c <= 0) continue;
        std::int64_t delta = n - r * c - 2;
        if (delta + c < 0) continue;  // c_id = n - c(r-1) - 2 >= 0
        FeasibilityRow row;
        row.d = d;
        row.n = n;
        row.r = r;
        row.c = c;
        row.delta = delta;
        row.degenerate_q = n == 2 * d;
        rows.push_back(row);
      }
    }
  }
  std::sort(rows.begin(), rows.end(),
            [](const FeasibilityRow& a, const FeasibilityRow& b) { return a.key() < b.key(); });
  return rows;
}

const std::vector<FeasibilityRow>& reference_table() {
  static const std::vector<FeasibilityRow> table = [] {
    // (d, n, r, c, delta), n <= 500, r an odd prime
    const std::int64_t raw[][5] = {
        {6, 9, 3, 3, -2},       {15, 25, 5, 5, -2},     {11, 33, 3, 9, 4},
        {21, 36, 3, 12, -2},    {12, 45, 3, 12, 7},     {33, 45, 5, 10, -7},
        {28, 49, 7, 7, -2},     {34, 51, 3, 18, -5},    {22, 55, 5, 10, 3},
        {52, 65, 5, 15, -12},   {45, 81, 3, 27, -2},    {65, 91, 7, 14, -9},
        {76, 96, 3, 36, -14},   {33, 99, 3, 30, 7},     {55, 100, 5, 20, -2},
        {14, 105, 3, 27, 22},   {40, 105, 7, 14, 5},    {65, 105, 3, 36, -5},
        {35, 120, 3, 36, 10},   {66, 121, 11, 11, -2},  {105, 126, 3, 48, -20},
        {86, 129, 3, 45, -8},   {78, 144, 3, 48, -2},   {29, 145, 5, 25, 18},
        {46, 161, 7, 21, 12},   {91, 169, 13, 13, -2},  {30, 175, 5, 30, 23},
        {145, 175, 7, 28, -23}, {133, 190, 5, 40, -12}, {105, 196, 7, 28, -2},
        {67, 201, 3, 63, 10},   {77, 210, 5, 40, 8},    {133, 210, 3, 72, -8},
        {186, 217, 7, 35, -30}, {120, 225, 3, 75, -2},  {120, 225, 5, 45, -2},
        {175, 225, 3, 81, -20}, {70, 231, 3, 72, 13},   {161, 231, 11, 22, -13},
        {162, 243, 3, 84, -11}, {41, 246, 3, 72, 28},   {92, 253, 11, 22, 9},
        {52, 273, 7, 35, 26},   {221, 273, 3, 99, -26}, {217, 280, 5, 60, -22},
        {42, 288, 3, 84, 34},   {153, 289, 17, 17, -2}, {177, 295, 5, 60, -7},
        {129, 301, 7, 42, 5},   {88, 320, 5, 60, 18},   {171, 324, 3, 108, -2},
        {225, 325, 13, 26, -15},{260, 325, 5, 70, -27}, {113, 339, 3, 108, 13},
        {78, 351, 3, 108, 25},  {126, 351, 13, 26, 11}, {225, 351, 3, 120, -11},
        {190, 361, 19, 19, -2}, {117, 378, 3, 120, 16}, {261, 378, 7, 56, -16},
        {33, 385, 5, 65, 58},   {55, 385, 7, 49, 40},   {105, 385, 11, 33, 20},
        {154, 385, 5, 75, 8},   {262, 393, 3, 135, -14},{210, 400, 5, 80, -2},
        {145, 406, 7, 56, 12},  {56, 441, 7, 56, 47},   {231, 441, 3, 147, -2},
        {231, 441, 7, 63, -2},  {385, 441, 3, 162, -47},{369, 451, 11, 44, -35},
        {391, 460, 5, 100, -42},{370, 481, 13, 39, -28},{253, 484, 11, 44, -2},
        {97, 485, 5, 90, 33},   {209, 495, 3, 162, 7},  {286, 495, 5, 100, -7},
    };
    std::vector<FeasibilityRow> rows;
    for (const auto& t : raw) {
      FeasibilityRow row;
      row.d = t[0];
      row.n = t[1];
      row.r = t[2];
      row.c = t[3];
      row.delta = t[4];
      rows.push_back(row);
    }
    return rows;
  }();
  return table;
}

CrossCheckReport cross_check_table(const std::vector<FeasibilityRow>& rows,
                                   const std::vector<FeasibilityRow>& reference) {
  CrossCheckReport report;
  for (const auto& ref : reference) {
    bool found = false;
    for (const auto& row : rows) {
      if (row.same_tuple(ref)) {
        found = true;
        break;
      }
    }
    if (!found) report.missing.push_back(ref);
  }
  for (const auto& row : rows) {
    bool found = false;
    for (const auto& ref : reference) {
      if (row.same_tuple(ref)) {
        found = true;
        break;
      }
    }
    if (!found) report.extras.push_back(row);
  }
  report.all_reference_found = report.missing.empty();
  return report;
}

}  // namespace rouxlab
