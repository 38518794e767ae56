#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "catdeco/quasi.hpp"
#include "catdeco/states.hpp"

namespace catdeco {

// Grid files: header "# x y value", then one "x,y,value" row per sample with y
// as the outer loop and x inner, 17 significant digits. Readers also accept
// whitespace-separated columns.
void write_real_csv(std::ostream& os, const RealField& f);
RealField read_real_csv(std::istream& is);

// "# u v re im" rows over the gamma grid, same ordering.
void write_complex_csv(std::ostream& os, const ComplexField& c);

// "# s=<value>" line followed by the RealField format.
void write_ordered_csv(std::ostream& os, const OrderedDistribution& d);
OrderedDistribution read_ordered_csv(std::istream& is);

// "# m n re im" rows over the upper triangle m <= n.
void write_fock_csv(std::ostream& os, const FockDensityMatrix& rho);
FockDensityMatrix read_fock_csv(std::istream& is);

/**
 * Binary P6 heatmap, one pixel per sample, image row 0 = y_min.
 * With m = max|v|: v = -m maps to (0,0,255), 0 to white, +m to (255,0,0),
 * linear in between, channels rounded to nearest. An all-zero field is white.
 */
std::string render_ppm(const RealField& f);

std::string format_double(double v);

// Write to a sibling temporary file, then rename over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

RealField load_real_csv(const std::filesystem::path& path);
void save_real_csv(const std::filesystem::path& path, const RealField& f);

}  // namespace catdeco
