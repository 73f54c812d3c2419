#include "lydim/transition_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "lydim/errors.hpp"

namespace lydim {

TransitionMatrix::TransitionMatrix(std::size_t m, std::vector<std::uint8_t> entries)
    : m_(m), bits_(std::move(entries)) {
  if (m_ < 2) throw UsageError("matrix size must be at least 2, got " + std::to_string(m_));
  if (bits_.size() != m_ * m_) {
    throw UsageError("expected " + std::to_string(m_ * m_) + " entries, got " +
                     std::to_string(bits_.size()));
  }
  for (std::size_t k = 0; k < bits_.size(); ++k) {
    if (bits_[k] > 1) {
      throw UsageError("entry at flat index " + std::to_string(k) + " is not 0/1");
    }
  }
  for (std::size_t i = 1; i <= m_; ++i) {
    bool row = false, col = false;
    for (std::size_t j = 1; j <= m_; ++j) {
      row = row || entry(i, j);
      col = col || entry(j, i);
    }
    if (!row) throw UsageError("row " + std::to_string(i) + " has no 1 (dead symbol)");
    if (!col) throw UsageError("column " + std::to_string(i) + " has no 1 (dead symbol)");
  }
}

TransitionMatrix TransitionMatrix::full_shift(std::size_t m) {
  return TransitionMatrix(m, std::vector<std::uint8_t>(m * m, 1));
}

TransitionMatrix TransitionMatrix::star(std::size_t m, bool unit_diagonal) {
  std::vector<std::uint8_t> bits(m * m, 0);
  for (std::size_t k = 0; k < m; ++k) {
    bits[k] = 1;      // first row
    bits[k * m] = 1;  // first column
  }
  bits[0] = unit_diagonal ? 1 : 0;
  return TransitionMatrix(m, std::move(bits));
}

TransitionMatrix TransitionMatrix::parse(std::string_view literal) {
  std::vector<std::vector<std::uint8_t>> rows;
  std::string row_text;
  std::istringstream in{std::string(literal)};
  while (std::getline(in, row_text, ';')) {
    std::vector<std::uint8_t> row;
    std::istringstream row_in{row_text};
    std::string cell;
    while (std::getline(row_in, cell, ',')) {
      cell.erase(std::remove_if(cell.begin(), cell.end(), ::isspace), cell.end());
      if (cell == "0") {
        row.push_back(0);
      } else if (cell == "1") {
        row.push_back(1);
      } else {
        throw UsageError("matrix entry must be 0 or 1, got '" + cell + "'");
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw UsageError("empty matrix literal");
  const std::size_t m = rows.size();
  std::vector<std::uint8_t> bits;
  bits.reserve(m * m);
  for (const auto& row : rows) {
    if (row.size() != m) {
      throw UsageError("matrix literal is not square: " + std::to_string(m) +
                       " rows but a row of length " + std::to_string(row.size()));
    }
    bits.insert(bits.end(), row.begin(), row.end());
  }
  return TransitionMatrix(m, std::move(bits));
}

std::string TransitionMatrix::to_literal() const {
  std::string out;
  for (std::size_t i = 1; i <= m_; ++i) {
    if (i > 1) out += ';';
    for (std::size_t j = 1; j <= m_; ++j) {
      if (j > 1) out += ',';
      out += entry(i, j) ? '1' : '0';
    }
  }
  return out;
}

bool TransitionMatrix::entry(std::size_t i, std::size_t j) const {
  if (i < 1 || i > m_ || j < 1 || j > m_) {
    throw UsageError("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                     ") outside 1.." + std::to_string(m_));
  }
  return bits_[(i - 1) * m_ + (j - 1)] != 0;
}

std::size_t TransitionMatrix::row_sum(std::size_t i) const {
  std::size_t sum = 0;
  for (std::size_t j = 1; j <= m_; ++j) sum += entry(i, j) ? 1 : 0;
  return sum;
}

bool is_irreducible(const TransitionMatrix& a) {
  const std::size_t m = a.size();
  // reachability closure from each vertex; paths of length 1..m suffice
  for (std::size_t start = 1; start <= m; ++start) {
    std::vector<bool> seen(m + 1, false);
    std::vector<std::size_t> queue{start};
    std::size_t reached = 0;
    while (!queue.empty()) {
      std::size_t i = queue.back();
      queue.pop_back();
      for (std::size_t j = 1; j <= m; ++j) {
        if (a.entry(i, j) && !seen[j]) {
          seen[j] = true;
          ++reached;
          queue.push_back(j);
        }
      }
    }
    if (reached != m) return false;  // some j unreachable from start
  }
  return true;
}

std::optional<std::size_t> branching_row(const TransitionMatrix& a) {
  for (std::size_t i = 1; i <= a.size(); ++i) {
    if (a.row_sum(i) >= 2) return i;
  }
  return std::nullopt;
}

bool is_star(const TransitionMatrix& a, std::size_t i, bool strict) {
  const std::size_t m = a.size();
  if (i < 1 || i > m) {
    throw UsageError("star index " + std::to_string(i) + " outside 1.." + std::to_string(m));
  }
  for (std::size_t j = 1; j <= m; ++j) {
    if (!a.entry(i, j) || !a.entry(j, i)) return false;
  }
  if (strict) {
    for (std::size_t r = 1; r <= m; ++r) {
      for (std::size_t c = 1; c <= m; ++c) {
        if (r != i && c != i && a.entry(r, c)) return false;
      }
    }
  }
  return true;
}

double spectral_radius(const TransitionMatrix& a, double tol) {
  if (!is_irreducible(a)) {
    throw DomainError("spectral_radius requires an irreducible matrix");
  }
  const std::size_t m = a.size();
  // Power iteration on A+I: primitive for irreducible A, so the Rayleigh
  // quotient converges; rho(A) = rho(A+I) - 1.
  std::vector<double> x(m, 1.0), y(m, 0.0);
  double rayleigh = 0.0;
  const int cap = 100000;
  for (int it = 1; it <= cap; ++it) {
    for (std::size_t i = 0; i < m; ++i) {
      double acc = x[i];  // the +I term
      for (std::size_t j = 0; j < m; ++j) {
        if (a.entry(i + 1, j + 1)) acc += x[j];
      }
      y[i] = acc;
    }
    double xy = 0.0, xx = 0.0, norm = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      xy += x[i] * y[i];
      xx += x[i] * x[i];
      norm = std::max(norm, std::abs(y[i]));
    }
    const double next = xy / xx;
    for (std::size_t i = 0; i < m; ++i) x[i] = y[i] / norm;
    // residual of the shifted problem, scale-free
    double resid = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      double acc = x[i];
      for (std::size_t j = 0; j < m; ++j) {
        if (a.entry(i + 1, j + 1)) acc += x[j];
      }
      resid = std::max(resid, std::abs(acc - next * x[i]));
    }
    const bool stabilized = it > 1 && std::abs(next - rayleigh) <= tol * 0.5;
    rayleigh = next;
    if (stabilized && resid <= tol) return rayleigh - 1.0;
  }
  throw ConvergenceError(
      "power iteration did not stabilize after " + std::to_string(cap) +
          " iterations (periodicity problem?); last iterate " + std::to_string(rayleigh - 1.0),
      rayleigh - 1.0);
}

BigInt count_admissible_words(const TransitionMatrix& a, std::size_t n) {
  if (n < 1) throw UsageError("word length must be at least 1");
  const std::size_t m = a.size();
  if (n == 1) return BigInt(m);
  // column vector of ones pushed through A^(n-1), exact integers
  std::vector<BigInt> v(m, 1), w(m);
  for (std::size_t step = 1; step < n; ++step) {
    for (std::size_t i = 0; i < m; ++i) {
      BigInt acc = 0;
      for (std::size_t j = 0; j < m; ++j) {
        if (a.entry(i + 1, j + 1)) acc += v[j];
      }
      w[i] = acc;
    }
    std::swap(v, w);
  }
  return std::accumulate(v.begin(), v.end(), BigInt(0));
}

std::vector<SymbolWord> enumerate_admissible_words(const TransitionMatrix& a,
                                                   std::size_t n, std::size_t budget) {
  if (n < 1) throw UsageError("word length must be at least 1");
  const BigInt total = count_admissible_words(a, n);
  if (total > budget) {
    throw BudgetError("enumeration of " + total.str() + " words exceeds budget " +
                      std::to_string(budget));
  }
  const int m = static_cast<int>(a.size());
  std::vector<SymbolWord> out;
  out.reserve(total.convert_to<std::size_t>());
  std::vector<Symbol> current;
  current.reserve(n);
  // depth-first in symbol order gives lexicographic output
  auto descend = [&](auto&& self, std::size_t depth) -> void {
    if (depth == n) {
      out.emplace_back(m, current);
      return;
    }
    for (Symbol next = 1; next <= m; ++next) {
      if (!current.empty() &&
          !a.entry(static_cast<std::size_t>(current.back()), static_cast<std::size_t>(next))) {
        continue;
      }
      current.push_back(next);
      self(self, depth + 1);
      current.pop_back();
    }
  };
  descend(descend, 0);
  return out;
}

}  // namespace lydim
