#pragma once

#include <cstddef>
#include <vector>

namespace monodromy {

// Dense integer matrix over 64-bit entries; the container for boundary
// operators, coboundaries and Smith data.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long long at(int i, int j) const { return a_[index(i, j)]; }
  long long& at(int i, int j) { return a_[index(i, j)]; }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<long long> a_;
};

}  // namespace monodromy
