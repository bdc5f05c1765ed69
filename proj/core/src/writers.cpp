#include "realgas/writers.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "realgas/error.hpp"

namespace realgas {

namespace {

void put(std::string& out, double x) {
  if (!std::isfinite(x)) throw IoError("refusing to write a non-finite value");
  char buf[32];
  const int n = std::snprintf(buf, sizeof buf, "%.17g", x);
  out.append(buf, static_cast<std::size_t>(n));
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace

std::vector<ProfileRow> profile(const Field1D& field) {
  std::vector<ProfileRow> rows(field.cells.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const FlowState w = to_primitive(field.eos, field.cells[i]);
    rows[i] = {field.x_center(static_cast<int>(i)), w.rho, w.u, w.p,
               internal_energy(field.eos, w.rho, w.p)};
  }
  return rows;
}

std::string csv_1d(const std::vector<ProfileRow>& rows) {
  if (rows.empty()) throw IoError("refusing to write an empty profile");
  std::string out = "x,rho,u,p,e\n";
  for (const ProfileRow& r : rows) {
    put(out, r.x);
    out.push_back(',');
    put(out, r.rho);
    out.push_back(',');
    put(out, r.u);
    out.push_back(',');
    put(out, r.p);
    out.push_back(',');
    put(out, r.e);
    out.push_back('\n');
  }
  return out;
}

std::string csv_1d(const Field1D& field) {
  if (field.cells.empty()) throw IoError("refusing to write an empty field");
  return csv_1d(profile(field));
}

void write_csv_1d(const Field1D& field, const std::string& path) {
  std::string text;
  try {
    text = csv_1d(field);
  } catch (const IoError& e) {
    throw IoError(path + ": " + e.what());
  }
  write_file(path, text);
}

void write_csv_1d(const std::vector<ProfileRow>& rows, const std::string& path) {
  std::string text;
  try {
    text = csv_1d(rows);
  } catch (const IoError& e) {
    throw IoError(path + ": " + e.what());
  }
  write_file(path, text);
}

std::vector<ProfileRow> read_csv_1d(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || line != "x,rho,u,p,e")
    throw IoError(path + ": missing header x,rho,u,p,e");
  std::vector<ProfileRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ProfileRow r;
    char* end = nullptr;
    const char* s = line.c_str();
    double* fields[] = {&r.x, &r.rho, &r.u, &r.p, &r.e};
    for (std::size_t k = 0; k < 5; ++k) {
      *fields[k] = std::strtod(s, &end);
      if (end == s || (k < 4 && *end != ',') || (k == 4 && *end != '\0'))
        throw IoError(path + ": malformed row '" + line + "'");
      s = end + 1;
    }
    rows.push_back(r);
  }
  return rows;
}

std::string vtk_2d(const Field2D& field, const std::string& title) {
  if (field.cells.empty()) throw IoError("refusing to write an empty field");
  const std::size_t n = field.cells.size();
  std::vector<FlowState> w(n);
  std::vector<double> e(n);
  for (std::size_t k = 0; k < n; ++k) {
    w[k] = to_primitive(field.eos, field.cells[k]);
    e[k] = internal_energy(field.eos, w[k].rho, w[k].p);
  }
  std::string out = "# vtk DataFile Version 3.0\n" + title + "\nASCII\nDATASET STRUCTURED_POINTS\n";
  out += "DIMENSIONS " + std::to_string(field.nx + 1) + " " + std::to_string(field.ny + 1) + " 1\n";
  out += "ORIGIN ";
  put(out, field.x_lo);
  out += " ";
  put(out, field.y_lo);
  out += " 0\nSPACING ";
  put(out, field.dx);
  out += " ";
  put(out, field.dy);
  out += " 1\nCELL_DATA " + std::to_string(n) + "\n";
  auto scalars = [&](const char* name, auto get) {
    out += "SCALARS ";
    out += name;
    out += " double 1\nLOOKUP_TABLE default\n";
    for (std::size_t k = 0; k < n; ++k) {
      put(out, get(k));
      out.push_back('\n');
    }
  };
  scalars("rho", [&](std::size_t k) { return w[k].rho; });
  scalars("u", [&](std::size_t k) { return w[k].u; });
  scalars("v", [&](std::size_t k) { return w[k].v; });
  scalars("p", [&](std::size_t k) { return w[k].p; });
  scalars("e", [&](std::size_t k) { return e[k]; });
  return out;
}

void write_vtk_2d(const Field2D& field, const std::string& path, const std::string& title) {
  std::string text;
  try {
    text = vtk_2d(field, title);
  } catch (const Error& e) {
    throw IoError(path + ": " + e.what());
  }
  write_file(path, text);
}

}  // namespace realgas
