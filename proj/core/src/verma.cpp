#include "semibounded/verma.hpp"

#include <map>
#include <string>

#include "semibounded/errors.hpp"

namespace semibounded::virasoro {

namespace {

void build_partitions(int remaining, int largest, Partition& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(remaining, largest); part >= 1; --part) {
    current.push_back(part);
    build_partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

/// Linear combinations of words d_{-m_1} d_{-m_2} ... v (m_i > 0, any order).
template <class Scalar>
class VermaAlgebra {
 public:
  using Word = std::vector<int>;
  using Combination = std::map<Word, Scalar>;

  VermaAlgebra(const Scalar& c, const Scalar& h) : c_(c), h_(h) {}

  /// d_n applied to a single word.
  const Combination& apply(int n, const Word& word) {
    const auto key = std::make_pair(n, word);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Combination out;
    if (n < 0) {
      Word w{-n};
      w.insert(w.end(), word.begin(), word.end());
      out[w] = Scalar(1);
    } else if (n == 0) {
      int level = 0;
      for (int m : word) level += m;
      out[word] = h_ + Scalar(level);
    } else if (!word.empty()) {
      const int m = word.front();
      const Word rest(word.begin() + 1, word.end());
      // d_n d_{-m} R = d_{-m} d_n R + (n+m) d_{n-m} R + delta_{n,m} (n^3-n)/12 c R.
      for (const auto& [w, coeff] : apply(n, rest)) {
        Word prefixed{m};
        prefixed.insert(prefixed.end(), w.begin(), w.end());
        accumulate(out, prefixed, coeff);
      }
      for (const auto& [w, coeff] : apply(n - m, rest)) accumulate(out, w, Scalar(n + m) * coeff);
      if (n == m) accumulate(out, rest, Scalar(n * n * n - n) / Scalar(12) * c_);
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

  Combination apply(int n, const Combination& v) {
    Combination out;
    for (const auto& [w, coeff] : v) {
      for (const auto& [w2, c2] : apply(n, w)) accumulate(out, w2, coeff * c2);
    }
    return out;
  }

 private:
  static void accumulate(Combination& into, const Word& w, const Scalar& value) {
    auto [it, inserted] = into.try_emplace(w, value);
    if (!inserted) it->second += value;
  }

  Scalar c_, h_;
  std::map<std::pair<int, Word>, Combination> memo_;
};

void validate(const Partition& p, int max_level) {
  int level = 0;
  for (int part : p) {
    if (part <= 0) throw DomainError("partition entries must be positive");
    level += part;
  }
  if (level > max_level) {
    throw DomainError("Verma level " + std::to_string(level) + " exceeds the supported maximum of " +
                      std::to_string(max_level));
  }
}

}  // namespace

std::vector<Partition> partitions(int level) {
  if (level < 0) throw DomainError("level must be non-negative");
  if (level > kMaxVermaLevel) {
    throw DomainError("Verma level " + std::to_string(level) + " exceeds the supported maximum of " +
                      std::to_string(kMaxVermaLevel));
  }
  std::vector<Partition> out;
  Partition current;
  build_partitions(level, level, current, out);
  return out;
}

template <class Scalar>
GramMatrix<Scalar> verma_gram(const std::vector<Partition>& basis, const Scalar& c, const Scalar& h) {
  for (const auto& p : basis) validate(p, kMaxVermaLevel);
  VermaAlgebra<Scalar> algebra(c, h);
  const std::size_t n = basis.size();
  GramMatrix<Scalar> gram(n, std::vector<Scalar>(n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // <d_{-a} d_{-b} ... v, w> = <v, ... d_b d_a w>.
      typename VermaAlgebra<Scalar>::Combination state{{basis[j], Scalar(1)}};
      for (int part : basis[i]) state = algebra.apply(part, state);
      const auto it = state.find({});
      gram[i][j] = it == state.end() ? Scalar(0) : it->second;
    }
  }
  return gram;
}

template GramMatrix<double> verma_gram<double>(const std::vector<Partition>&, const double&, const double&);
template GramMatrix<Rational> verma_gram<Rational>(const std::vector<Partition>&, const Rational&, const Rational&);

Rational determinant(const GramMatrix<Rational>& m) {
  const std::size_t n = m.size();
  auto a = m;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= factor * a[col][k];
    }
  }
  return det;
}

Eigen::MatrixXd to_matrix(const GramMatrix<double>& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = m[i][j];
  }
  return out;
}

Eigen::MatrixXd to_matrix(const GramMatrix<Rational>& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = static_cast<double>(m[i][j]);
  }
  return out;
}

Rational pair_determinant(int n, const Rational& c, const Rational& h) {
  if (n < 1) throw DomainError("pair_determinant: n must be positive");
  return determinant(verma_gram<Rational>({Partition{2 * n}, Partition{n, n}}, c, h));
}

std::vector<UnitarityPoint> unitarity_scan(const std::vector<double>& c_grid, const std::vector<double>& h_grid,
                                           int max_level) {
  if (max_level < 1 || max_level > kMaxVermaLevel) {
    throw DomainError("unitarity_scan: max_level must lie in [1, " + std::to_string(kMaxVermaLevel) + "]");
  }
  std::vector<UnitarityPoint> out;
  for (double c : c_grid) {
    for (double h : h_grid) {
      UnitarityPoint point{c, h, 0, std::numeric_limits<double>::infinity(), 0};
      for (int level = 1; level <= max_level; ++level) {
        const Eigen::MatrixXd g = to_matrix(verma_gram<double>(level, c, h));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(g, Eigen::EigenvaluesOnly);
        const double lowest = eig.eigenvalues().minCoeff();
        point.min_eigenvalue = std::min(point.min_eigenvalue, lowest);
        const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
        if (point.first_negative_level == 0 && lowest < -1e-9 * scale) point.first_negative_level = level;
      }
      for (int n = 1; 2 * n <= max_level; ++n) {
        const auto g = verma_gram<double>({Partition{2 * n}, Partition{n, n}}, c, h);
        const double det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
        if (det < 0.0) {
          point.first_negative_pair = n;
          break;
        }
      }
      out.push_back(point);
    }
  }
  return out;
}

}  // namespace semibounded::virasoro
