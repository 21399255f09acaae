#include "treeshift/transition_matrix.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace treeshift {

namespace {

std::vector<bool> reachable_from(const TransitionMatrix::Storage& m, int start, bool transpose) {
  const int d = static_cast<int>(m.rows());
  std::vector<bool> seen(d, false);
  std::vector<int> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < d; ++j) {
      int e = transpose ? m(j, i) : m(i, j);
      if (e != 0 && !seen[j]) {
        seen[j] = true;
        stack.push_back(j);
      }
    }
  }
  return seen;
}

}  // namespace

bool TransitionMatrix::irreducible(const Storage& m) {
  for (bool transpose : {false, true}) {
    auto seen = reachable_from(m, 0, transpose);
    for (bool s : seen)
      if (!s) return false;
  }
  return true;
}

TransitionMatrix::TransitionMatrix(Storage m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("transition matrix must be square");
  if (m_.rows() < 2) throw std::invalid_argument("transition matrix needs at least 2 symbols");
  for (Eigen::Index i = 0; i < m_.rows(); ++i)
    for (Eigen::Index j = 0; j < m_.cols(); ++j)
      if (m_(i, j) != 0 && m_(i, j) != 1) throw std::invalid_argument("transition matrix entries must be 0 or 1");
  if (!irreducible(m_)) throw std::invalid_argument("transition matrix is reducible");
}

TransitionMatrix TransitionMatrix::golden() {
  Storage m(2, 2);
  m << 1, 1, 1, 0;
  return TransitionMatrix(m);
}

TransitionMatrix TransitionMatrix::full_shift(int d) {
  if (d < 2) throw std::invalid_argument("full shift needs at least 2 symbols");
  return TransitionMatrix(Storage::Ones(d, d));
}

TransitionMatrix TransitionMatrix::parse(std::istream& in) {
  long d = 0;
  if (!(in >> d)) throw std::invalid_argument("matrix file: missing dimension");
  if (d < 2 || d > 64) throw std::invalid_argument("matrix file: dimension must be in [2, 64]");
  Storage m(d, d);
  for (long i = 0; i < d; ++i) {
    for (long j = 0; j < d; ++j) {
      int v = 0;
      if (!(in >> v)) throw std::invalid_argument("matrix file: expected " + std::to_string(d * d) + " entries");
      m(i, j) = v;
    }
  }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("matrix file: trailing data '" + extra + "'");
  return TransitionMatrix(m);
}

TransitionMatrix TransitionMatrix::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file '" + path + "'");
  return parse(in);
}

bool TransitionMatrix::is_golden() const { return *this == golden(); }

bool TransitionMatrix::is_full_shift() const { return (m_.array() == 1).all(); }

std::string TransitionMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < m_.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (Eigen::Index j = 0; j < m_.cols(); ++j) os << (j ? "," : "") << m_(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace treeshift
