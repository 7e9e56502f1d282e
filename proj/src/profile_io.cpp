#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "polyemden/format.hpp"
#include "polyemden/radial.hpp"

namespace polyemden {

void write_profile_csv(std::ostream& os, const RadialProfile& profile) {
  os << "r";
  for (int k = 0; k < profile.alpha; ++k) os << ",u" << k << ",du" << k;
  for (int k = 0; k < profile.beta; ++k) os << ",v" << k << ",dv" << k;
  os << '\n';
  for (std::size_t i = 0; i < profile.grid.size(); ++i) {
    os << fmt17(profile.grid[i]);
    for (int k = 0; k < profile.alpha; ++k) os << ',' << fmt17(profile.u[k][i]) << ',' << fmt17(profile.du[k][i]);
    for (int k = 0; k < profile.beta; ++k) os << ',' << fmt17(profile.v[k][i]) << ',' << fmt17(profile.dv[k][i]);
    os << '\n';
  }
}

RadialProfile read_profile_csv(std::istream& is, int alpha, int beta) {
  std::string line;
  if (!std::getline(is, line)) throw ValidationError("profile CSV: missing header");
  std::string expected = "r";
  for (int k = 0; k < alpha; ++k) expected += ",u" + std::to_string(k) + ",du" + std::to_string(k);
  for (int k = 0; k < beta; ++k) expected += ",v" + std::to_string(k) + ",dv" + std::to_string(k);
  if (line != expected) throw ValidationError("profile CSV: header mismatch, expected '" + expected + "'");

  std::vector<std::vector<double>> rows;
  const std::size_t width = 1 + 2 * static_cast<std::size_t>(alpha + beta);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (row.size() != width) throw ValidationError("profile CSV: wrong number of columns");
    rows.push_back(std::move(row));
  }
  std::vector<double> nodes;
  for (const auto& r : rows) nodes.push_back(r[0]);
  RadialProfile prof(RadialGrid(std::move(nodes)), alpha, beta);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::size_t c = 1;
    for (int k = 0; k < alpha; ++k) {
      prof.u[k][i] = rows[i][c++];
      prof.du[k][i] = rows[i][c++];
    }
    for (int k = 0; k < beta; ++k) {
      prof.v[k][i] = rows[i][c++];
      prof.dv[k][i] = rows[i][c++];
    }
  }
  return prof;
}

}  // namespace polyemden
