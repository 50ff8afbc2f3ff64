#include "calibra/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "calibra/error.hpp"
#include "calibra/rng.hpp"

namespace calibra {

namespace {

int read_pnm_token(std::istream& is, const std::string& path) {
  // Skips whitespace and '#' comments between header fields.
  int c = is.get();
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = is.get();
    } else if (!std::isspace(c)) {
      break;
    }
    c = is.get();
  }
  if (c == EOF) fail_io("truncated PGM header: " + path);
  int value = 0;
  bool any = false;
  while (c != EOF && std::isdigit(c)) {
    value = value * 10 + (c - '0');
    any = true;
    c = is.get();
  }
  if (!any) fail_io("malformed PGM header: " + path);
  return value;
}

}  // namespace

Pgm read_pgm(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) fail_io("cannot open " + path.string());
  char magic[2] = {0, 0};
  is.read(magic, 2);
  if (magic[0] != 'P' || magic[1] != '5') fail_io("not a P5 graymap: " + path.string());
  Pgm img;
  img.width = read_pnm_token(is, path.string());
  img.height = read_pnm_token(is, path.string());
  img.maxval = read_pnm_token(is, path.string());
  if (img.width <= 0 || img.height <= 0 || img.maxval <= 0 || img.maxval > 65535)
    fail_io("bad PGM dimensions in " + path.string());
  const std::size_t n = static_cast<std::size_t>(img.width) * img.height;
  img.pixels.resize(n);
  if (img.maxval < 256) {
    std::vector<unsigned char> raw(n);
    is.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(n));
    if (!is) fail_io("truncated pixel data in " + path.string());
    for (std::size_t i = 0; i < n; ++i) img.pixels[i] = raw[i];
  } else {
    std::vector<unsigned char> raw(2 * n);
    is.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(2 * n));
    if (!is) fail_io("truncated pixel data in " + path.string());
    for (std::size_t i = 0; i < n; ++i)
      img.pixels[i] = static_cast<std::uint16_t>((raw[2 * i] << 8) | raw[2 * i + 1]);
  }
  return img;
}

void write_pgm(const std::filesystem::path& path, const Pgm& img) {
  std::ofstream os(path, std::ios::binary);
  if (!os) fail_io("cannot write " + path.string());
  os << "P5\n" << img.width << ' ' << img.height << '\n' << img.maxval << '\n';
  const std::size_t n = static_cast<std::size_t>(img.width) * img.height;
  if (img.maxval < 256) {
    std::vector<unsigned char> raw(n);
    for (std::size_t i = 0; i < n; ++i) raw[i] = static_cast<unsigned char>(img.pixels[i]);
    os.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(n));
  } else {
    std::vector<unsigned char> raw(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      raw[2 * i] = static_cast<unsigned char>(img.pixels[i] >> 8);
      raw[2 * i + 1] = static_cast<unsigned char>(img.pixels[i] & 0xff);
    }
    os.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(2 * n));
  }
  if (!os) fail_io("failed writing " + path.string());
}

Pgm to_pgm(const ArrayX<double>& values, int height, int width, int maxval) {
  Pgm img;
  img.width = width;
  img.height = height;
  img.maxval = maxval;
  img.pixels.resize(static_cast<std::size_t>(width) * height);
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    double v = std::min(1.0, std::max(0.0, values[i]));
    img.pixels[static_cast<std::size_t>(i)] =
        static_cast<std::uint16_t>(std::lround(v * maxval));
  }
  return img;
}

ArrayX<double> from_pgm(const Pgm& img) {
  ArrayX<double> out(static_cast<Eigen::Index>(img.pixels.size()));
  const double scale = 1.0 / img.maxval;
  for (std::size_t i = 0; i < img.pixels.size(); ++i)
    out[static_cast<Eigen::Index>(i)] = img.pixels[i] * scale;
  return out;
}

KvMap read_kv(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) fail_io("cannot open " + path.string());
  KvMap kv;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) fail_config("bad config line (want key=value): " + line);
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return kv;
}

void write_kv(const std::filesystem::path& path, const KvMap& kv) {
  std::ostringstream os;
  for (const auto& [k, v] : kv) os << k << '=' << v << '\n';
  write_file(path, os.str());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) fail_io("cannot open " + path.string());
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) fail_io("cannot write " + path.string());
  os.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!os) fail_io("failed writing " + path.string());
}

std::string fingerprint(const std::string& text) {
  std::uint64_t h = hash_str(text);
  std::ostringstream os;
  os << std::hex;
  for (int i = 15; i >= 0; --i) os << ((h >> (4 * i)) & 0xf);
  return os.str();
}

}  // namespace calibra
