#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "calibra/types.hpp"

namespace calibra {

// Binary P5 graymaps. 8-bit carries one byte per pixel; 16-bit carries two,
// most significant byte first, maxval 65535.
struct Pgm {
  int width = 0;
  int height = 0;
  int maxval = 255;
  std::vector<std::uint16_t> pixels;  // row-major
};

Pgm read_pgm(const std::filesystem::path& path);
void write_pgm(const std::filesystem::path& path, const Pgm& img);

/// Quantizes values in [0,1] to a graymap. maxval 255 or 65535.
Pgm to_pgm(const ArrayX<double>& values, int height, int width, int maxval);
ArrayX<double> from_pgm(const Pgm& img);

/// Flat key=value config text. Lines starting with '#' and blank lines are
/// ignored; later keys win.
using KvMap = std::map<std::string, std::string>;
KvMap read_kv(const std::filesystem::path& path);
void write_kv(const std::filesystem::path& path, const KvMap& kv);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

/// FNV-1a hex digest of a config blob; embedded in reports so a result can be
/// traced to the exact configuration that produced it.
std::string fingerprint(const std::string& text);

}  // namespace calibra
