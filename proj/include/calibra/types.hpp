#pragma once

#include <Eigen/Core>

#include <array>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <string>

namespace calibra {

// Dense storage is flat and row-major over the logical dims; Eigen supplies
// all elementwise and matrix arithmetic.
template <typename T>
using ArrayX = Eigen::Array<T, Eigen::Dynamic, 1>;
template <typename T>
using ArrayXX = Eigen::Array<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename T>
using MatrixRM = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename T>
using MatrixCM = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor>;
template <typename T>
using VectorX = Eigen::Matrix<T, Eigen::Dynamic, 1>;

template <typename T>
using MapArr = Eigen::Map<ArrayX<T>>;
template <typename T>
using CMapArr = Eigen::Map<const ArrayX<T>>;

/// Logical shape of a dense value, rank 0 (scalar) to 4.
class Shape {
 public:
  Shape() = default;
  Shape(std::initializer_list<int> dims) : rank_(static_cast<int>(dims.size())) {
    int i = 0;
    for (int d : dims) d_[i++] = d;
  }

  static Shape scalar() { return Shape{}; }

  int rank() const { return rank_; }
  int operator[](int i) const { return d_[i]; }
  int& operator[](int i) { return d_[i]; }

  std::int64_t numel() const {
    std::int64_t n = 1;
    for (int i = 0; i < rank_; ++i) n *= d_[i];
    return n;
  }

  bool operator==(const Shape& o) const {
    if (rank_ != o.rank_) return false;
    for (int i = 0; i < rank_; ++i)
      if (d_[i] != o.d_[i]) return false;
    return true;
  }
  bool operator!=(const Shape& o) const { return !(*this == o); }

  std::string str() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < rank_; ++i) os << (i ? "," : "") << d_[i];
    os << ']';
    return os.str();
  }

 private:
  std::array<int, 4> d_{1, 1, 1, 1};
  int rank_ = 0;
};

}  // namespace calibra
