#include "geocrystal/fundrep.hpp"

namespace geocrystal {

CartanData cartan_matrix(int n) {
  if (n < 2) throw InvalidRank("rank n must be >= 2, got " + std::to_string(n));
  const int size = n + 1;
  CartanData data{n, std::vector<std::vector<int>>(size, std::vector<int>(size, 0))};
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      if (i == j)
        data.a[i][j] = 2;
      else if (reduce_node(i - j - 1, n) == 0 || reduce_node(i - j + 1, n) == 0)
        data.a[i][j] = -1;
    }
  return data;
}

int reduce_node(int k, int n) {
  const int m = n + 1;
  return ((k % m) + m) % m;
}

void require_node(int k, int n) {
  if (k < 0 || k > n)
    throw IndexOutOfRange("node index " + std::to_string(k) + " outside 0.." + std::to_string(n));
}

bool is_valid_label(BasisLabel label, int n) {
  return 1 <= label.i && label.i < label.j && label.j <= n + 1;
}

std::vector<BasisLabel> basis_labels(int n) {
  if (n < 2) throw InvalidRank("rank n must be >= 2, got " + std::to_string(n));
  std::vector<BasisLabel> out;
  out.reserve(static_cast<std::size_t>(n * (n + 1) / 2));
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j) out.push_back({i, j});
  return out;
}

int weight_pairing(BasisLabel label, int k, int n) {
  require_node(k, n);
  auto delta = [&](int a) { return reduce_node(a, n) == k ? 1 : 0; };
  return delta(label.i) - delta(label.i - 1) + delta(label.j) - delta(label.j - 1);
}

std::optional<BasisLabel> lower_label(int k, BasisLabel label, int n) {
  require_node(k, n);
  const auto [i, j] = label;
  if (k == 0) {
    if (j == n + 1 && i != 1) return BasisLabel{1, i};
    return std::nullopt;
  }
  if (i == k && k < j - 1) return BasisLabel{i + 1, j};
  if (j == k) return BasisLabel{i, j + 1};
  return std::nullopt;
}

std::optional<BasisLabel> raise_label(int k, BasisLabel label, int n) {
  require_node(k, n);
  const auto [i, j] = label;
  if (k == 0) {
    // transpose of f_0: the domain is (1, j) with 2 <= j <= n
    if (i == 1 && 2 <= j && j <= n) return BasisLabel{j, n + 1};
    return std::nullopt;
  }
  if (i == k + 1) return BasisLabel{i - 1, j};
  if (i < j - 1 && j - 1 == k) return BasisLabel{i, j - 1};
  return std::nullopt;
}

std::map<BasisLabel, Rational> closed_form_X(const TorusPoint& x) {
  require_nonzero(x);
  return closed_form_X<Rational>(x, Rational(1));
}

std::map<BasisLabel, Rational> closed_form_Y(const TorusPoint& y) {
  require_nonzero(y);
  return closed_form_Y<Rational>(y, Rational(1));
}

}  // namespace geocrystal
