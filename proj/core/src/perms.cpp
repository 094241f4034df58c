#include "ringops/perms.hpp"

#include <numeric>
#include <stdexcept>

namespace ringops {

Permutation reorder_factors(const Permutation& position_perm,
                            const std::vector<int>& sizes) {
  const int k = position_perm.degree();
  if (static_cast<int>(sizes.size()) != k)
    throw std::invalid_argument("reorder_factors: size mismatch");
  const Permutation inv = position_perm.inverse();
  std::vector<int> out_sizes(k);
  for (int t = 1; t <= k; ++t) out_sizes[t - 1] = sizes[inv(t) - 1];
  long long total = lex_total(sizes);
  std::vector<int> img(static_cast<size_t>(total));
  std::vector<int> out_tuple(k);
  for (int rank = 1; rank <= total; ++rank) {
    auto tuple = lex_unrank(rank, sizes);
    for (int t = 1; t <= k; ++t) out_tuple[t - 1] = tuple[inv(t) - 1];
    img[rank - 1] = lex_rank(out_tuple, out_sizes);
  }
  return Permutation(std::move(img));
}

Permutation sigma_block(const Permutation& sigma, const std::vector<int>& j) {
  if (sigma.degree() != static_cast<int>(j.size()))
    throw std::invalid_argument("sigma_block: arity mismatch");
  return reorder_factors(sigma, j);
}

Permutation tensor_perms(const std::vector<Permutation>& taus) {
  std::vector<int> sizes;
  sizes.reserve(taus.size());
  for (const auto& t : taus) sizes.push_back(t.degree());
  long long total = lex_total(sizes);
  std::vector<int> img(static_cast<size_t>(total));
  std::vector<int> out(taus.size());
  for (int rank = 1; rank <= total; ++rank) {
    auto tuple = lex_unrank(rank, sizes);
    for (size_t t = 0; t < taus.size(); ++t) out[t] = taus[t](tuple[t]);
    img[rank - 1] = lex_rank(out, sizes);
  }
  return Permutation(std::move(img));
}

Permutation block_sum_perm(const Permutation& sigma, const std::vector<int>& j) {
  const int k = sigma.degree();
  if (static_cast<int>(j.size()) != k)
    throw std::invalid_argument("block_sum_perm: arity mismatch");
  int total = std::accumulate(j.begin(), j.end(), 0);
  // target slot t holds source block sigma^{-1}(t)
  Permutation inv = sigma.inverse();
  std::vector<int> toff(k + 1, 0);
  int off = 0;
  for (int t = 1; t <= k; ++t) {
    toff[t] = off;
    off += j[inv(t) - 1];
  }
  std::vector<int> img(total);
  int src = 0;
  for (int r = 1; r <= k; ++r)
    for (int x = 1; x <= j[r - 1]; ++x) img[src++] = toff[sigma(r)] + x;
  return Permutation(std::move(img));
}

Permutation direct_sum(const std::vector<Permutation>& taus) {
  int total = 0;
  for (const auto& t : taus) total += t.degree();
  std::vector<int> img(total);
  int off = 0;
  for (const auto& t : taus) {
    for (int x = 1; x <= t.degree(); ++x) img[off + x - 1] = off + t(x);
    off += t.degree();
  }
  return Permutation(std::move(img));
}

Permutation nu_distributivity(const BlockData& data) {
  const int k = data.k;
  if (static_cast<int>(data.j.size()) != k)
    throw std::invalid_argument("nu_distributivity: j length mismatch");
  if (static_cast<int>(data.i.size()) != k)
    throw std::invalid_argument("nu_distributivity: i rows mismatch");
  for (int r = 0; r < k; ++r)
    if (static_cast<int>(data.i[r].size()) != data.j[r])
      throw std::invalid_argument("nu_distributivity: i row length mismatch");

  // Right-hand factor sizes: per r the block sum of i_{r,q}.
  std::vector<int> rhs_sizes(k);
  std::vector<std::vector<int>> rhs_offset(k);
  for (int r = 0; r < k; ++r) {
    rhs_offset[r].resize(data.j[r] + 1, 0);
    int off = 0;
    for (int q = 1; q <= data.j[r]; ++q) {
      rhs_offset[r][q] = off;
      off += data.i[r][q - 1];
    }
    rhs_sizes[r] = off;
  }

  // Left side: blocks indexed by Q in lex order over the j sizes, block Q
  // of size prod_r i_{r,q_r}, elements x in lex order within the block.
  std::vector<int> img;
  std::vector<int> y(k);
  if (k == 0) return Permutation::identity(1);  // empty smash is 1
  std::vector<int> q(k, 1);
  bool any_zero_j = false;
  for (int r = 0; r < k; ++r)
    if (data.j[r] == 0) any_zero_j = true;
  if (any_zero_j) return Permutation();  // empty wedge factor collapses all
  while (true) {
    std::vector<int> block_sizes(k);
    for (int r = 0; r < k; ++r) block_sizes[r] = data.i[r][q[r] - 1];
    long long bs = lex_total(block_sizes);
    for (int xr = 1; xr <= bs; ++xr) {
      auto x = lex_unrank(xr, block_sizes);
      for (int r = 0; r < k; ++r) y[r] = rhs_offset[r][q[r]] + x[r];
      img.push_back(lex_rank(y, rhs_sizes));
    }
    int r = k - 1;
    while (r >= 0 && ++q[r] > data.j[r]) q[r--] = 1;
    if (r < 0) break;
  }
  return Permutation(std::move(img));
}

Permutation fiber_reorder(const FMorphism& psi, const FMorphism& phi, int k) {
  if (phi.target() != psi.source())
    throw std::invalid_argument("fiber_reorder: morphisms not composable");
  std::vector<int> left;  // i ascending
  for (int i = 1; i <= phi.source(); ++i) {
    int j = phi(i);
    if (j != 0 && psi(j) == k) left.push_back(i);
  }
  // right order: j ascending then i ascending
  std::vector<int> right = left;
  std::stable_sort(right.begin(), right.end(),
                   [&](int a, int b) { return phi(a) < phi(b); });
  std::vector<int> img(left.size());
  for (size_t a = 0; a < left.size(); ++a) {
    auto it = std::find(right.begin(), right.end(), left[a]);
    img[a] = static_cast<int>(it - right.begin()) + 1;
  }
  return Permutation(std::move(img));
}

Permutation sigma_k_comp(const FMorphism& psi, const FMorphism& phi,
                         const std::vector<int>& r, int k) {
  if (static_cast<int>(r.size()) != phi.source())
    throw std::invalid_argument("sigma_k_comp: r length mismatch");
  Permutation pos = fiber_reorder(psi, phi, k);
  if (pos.degree() == 0) return Permutation::identity(1);
  std::vector<int> sizes;
  for (int i = 1; i <= phi.source(); ++i) {
    int j = phi(i);
    if (j != 0 && psi(j) == k) sizes.push_back(r[i - 1]);
  }
  return reorder_factors(pos, sizes);
}

}  // namespace ringops
