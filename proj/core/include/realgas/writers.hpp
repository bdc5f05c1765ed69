#pragma once

#include <string>
#include <vector>

#include "realgas/fv_scheme.hpp"

namespace realgas {

/// One row of a 1D profile: cell centre and primitive values.
struct ProfileRow {
  double x = 0.0;
  double rho = 0.0;
  double u = 0.0;
  double p = 0.0;
  double e = 0.0;

  friend bool operator==(const ProfileRow&, const ProfileRow&) = default;
};

std::vector<ProfileRow> profile(const Field1D& field);

/// Header `x,rho,u,p,e`, one row per cell, 17 significant digits, LF endings.
/// Throws IoError for empty or non-finite data.
std::string csv_1d(const std::vector<ProfileRow>& rows);
std::string csv_1d(const Field1D& field);
void write_csv_1d(const Field1D& field, const std::string& path);
void write_csv_1d(const std::vector<ProfileRow>& rows, const std::string& path);
std::vector<ProfileRow> read_csv_1d(const std::string& path);

/// Legacy ASCII VTK, STRUCTURED_POINTS with CELL_DATA rho, u, v, p, e.
/// Throws IoError for empty or non-finite data.
std::string vtk_2d(const Field2D& field, const std::string& title = "realgas");
void write_vtk_2d(const Field2D& field, const std::string& path,
                  const std::string& title = "realgas");

}  // namespace realgas
