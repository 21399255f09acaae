#pragma once

#include <istream>
#include <string>

#include <Eigen/Core>

namespace treeshift {

/// d x d 0/1 adjacency matrix of a nearest-neighbour tree shift: a child may
/// carry label j under a parent labelled i iff M(i, j) = 1. Construction
/// rejects d < 2, non-0/1 entries, and reducible matrices.
class TransitionMatrix {
 public:
  using Storage = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

  explicit TransitionMatrix(Storage m);

  /// [[1,1],[1,0]]: no two adjacent 1s.
  static TransitionMatrix golden();
  /// All-ones d x d.
  static TransitionMatrix full_shift(int d);

  /// Text format: first token d, then d rows of d entries in {0,1}.
  static TransitionMatrix parse(std::istream& in);
  static TransitionMatrix load(const std::string& path);

  int size() const { return static_cast<int>(m_.rows()); }
  int operator()(int i, int j) const { return m_(i, j); }
  const Storage& storage() const { return m_; }
  bool is_golden() const;
  bool is_full_shift() const;
  std::string to_string() const;

  /// Strong connectivity of the directed graph of M.
  static bool irreducible(const Storage& m);

  friend bool operator==(const TransitionMatrix& a, const TransitionMatrix& b) { return a.m_ == b.m_; }

 private:
  Storage m_;
};

}  // namespace treeshift
