#include "ringops/fincat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ringops {

int lex_rank(std::span<const int> tuple, std::span<const int> sizes) {
  if (tuple.size() != sizes.size())
    throw std::invalid_argument("lex_rank: tuple/sizes length mismatch");
  long long rank = 0;
  for (size_t t = 0; t < tuple.size(); ++t) {
    if (tuple[t] < 1 || tuple[t] > sizes[t])
      throw std::invalid_argument("lex_rank: coordinate out of range");
    rank = rank * sizes[t] + (tuple[t] - 1);
  }
  return static_cast<int>(rank + 1);
}

std::vector<int> lex_unrank(int rank, std::span<const int> sizes) {
  long long r = rank - 1;
  std::vector<int> tuple(sizes.size());
  for (size_t t = sizes.size(); t-- > 0;) {
    if (sizes[t] == 0) throw std::invalid_argument("lex_unrank: zero size");
    tuple[t] = static_cast<int>(r % sizes[t]) + 1;
    r /= sizes[t];
  }
  if (r != 0) throw std::invalid_argument("lex_unrank: rank out of range");
  return tuple;
}

long long lex_total(std::span<const int> sizes) {
  long long total = 1;
  for (int s : sizes) total *= s;
  return total;
}

std::string encode_tuple(std::span<const std::string> parts) {
  std::string out = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  out += ')';
  return out;
}

std::vector<std::string> decode_tuple(const std::string& s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw std::invalid_argument("decode_tuple: not a tuple: " + s);
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (size_t i = 1; i + 1 < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !parts.empty()) parts.push_back(cur);
  return parts;
}

std::string encode_ints(std::span<const int> xs) {
  std::string out = "[";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  out += ']';
  return out;
}

std::vector<int> decode_ints(const std::string& s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("decode_ints: bad encoding: " + s);
  std::vector<int> out;
  std::string cur;
  for (size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i] == ',') {
      out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += s[i];
    }
  }
  if (!cur.empty()) out.push_back(std::stoi(cur));
  return out;
}

std::string CheckReport::summary() const {
  std::ostringstream os;
  os << suite << ": " << (passed() ? "pass" : "FAIL") << " (" << cases_checked
     << " cases" << (exhaustive ? ", exhaustive" : ", sampled") << ")";
  if (!failures.empty()) {
    os << " first failure: " << failures.front().law << " @ "
       << failures.front().witness;
  }
  return os.str();
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (int v : image_) {
    if (v < 1 || v > static_cast<int>(image_.size()) || seen[v - 1])
      throw std::invalid_argument("Permutation: image is not a bijection");
    seen[v - 1] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& inner) const {
  if (degree() != inner.degree())
    throw std::invalid_argument("Permutation::compose: degree mismatch");
  std::vector<int> img(image_.size());
  for (int i = 1; i <= degree(); ++i) img[i - 1] = (*this)(inner(i));
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(image_.size());
  for (int i = 1; i <= degree(); ++i) img[image_[i - 1] - 1] = i;
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::string Permutation::to_string() const { return encode_ints(image_); }

std::vector<Permutation> Permutation::all(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

FMorphism::FMorphism(int target, std::vector<int> image)
    : target_(target), image_(std::move(image)) {
  if (target_ < 0) throw std::invalid_argument("FMorphism: negative target");
  for (int v : image_)
    if (v < 0 || v > target_)
      throw std::invalid_argument("FMorphism: image entry out of range");
}

FMorphism FMorphism::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  return FMorphism(n, std::move(img));
}

FMorphism FMorphism::zero(int m, int n) {
  return FMorphism(n, std::vector<int>(m, 0));
}

FMorphism FMorphism::phi_n(int n) {
  return FMorphism(1, std::vector<int>(n, 1));
}

FMorphism FMorphism::from_permutation(const Permutation& p) {
  return FMorphism(p.degree(), p.image());
}

FMorphism FMorphism::compose(const FMorphism& inner) const {
  if (inner.target() != source())
    throw std::invalid_argument("FMorphism::compose: object mismatch");
  std::vector<int> img(inner.image().size());
  for (size_t i = 0; i < img.size(); ++i) img[i] = (*this)(inner.image()[i]);
  return FMorphism(target_, std::move(img));
}

std::vector<int> FMorphism::fiber(int j) const {
  std::vector<int> out;
  for (int i = 1; i <= source(); ++i)
    if ((*this)(i) == j) out.push_back(i);
  return out;
}

int FMorphism::fiber_size(int j) const {
  int c = 0;
  for (int v : image_) c += (v == j);
  return c;
}

bool FMorphism::is_effective() const {
  for (int v : image_)
    if (v == 0) return false;
  return true;
}

bool FMorphism::is_projection() const {
  std::vector<int> count(target_ + 1, 0);
  for (int v : image_) ++count[v];
  for (int j = 1; j <= target_; ++j)
    if (count[j] != 1) return false;
  return true;
}

bool FMorphism::is_permutation() const {
  return source() == target() && is_effective() && is_projection();
}

bool FMorphism::is_ordered_effective() const {
  if (!is_effective()) return false;
  for (size_t i = 1; i < image_.size(); ++i)
    if (image_[i - 1] > image_[i]) return false;
  return true;
}

Permutation FMorphism::to_permutation() const {
  if (!is_permutation())
    throw std::invalid_argument("FMorphism::to_permutation: not a permutation");
  return Permutation(image_);
}

bool FMorphism::operator<(const FMorphism& o) const {
  if (target_ != o.target_) return target_ < o.target_;
  return image_ < o.image_;
}

std::string FMorphism::to_string() const {
  return encode_ints(image_) + ":" + std::to_string(source()) + "->" +
         std::to_string(target());
}

Classification classify(const FMorphism& phi) {
  Classification c;
  c.effective = phi.is_effective();
  c.injection = c.effective;
  c.projection = phi.is_projection();
  c.permutation = c.injection && c.projection;
  c.ordered_effective = phi.is_ordered_effective();
  return c;
}

FMorphism wedge(const FMorphism& a, const FMorphism& b) {
  std::vector<int> img;
  img.reserve(a.source() + b.source());
  for (int v : a.image()) img.push_back(v);
  for (int v : b.image()) img.push_back(v == 0 ? 0 : v + a.target());
  return FMorphism(a.target() + b.target(), std::move(img));
}

FMorphism smash(const FMorphism& a, const FMorphism& b) {
  int m = a.source() * b.source();
  int n = a.target() * b.target();
  std::vector<int> img(m);
  const int sizes_src[2] = {a.source(), b.source()};
  const int sizes_dst[2] = {a.target(), b.target()};
  for (int i1 = 1; i1 <= a.source(); ++i1) {
    for (int i2 = 1; i2 <= b.source(); ++i2) {
      const int src[2] = {i1, i2};
      int pos = lex_rank(src, sizes_src);
      int v1 = a(i1), v2 = b(i2);
      if (v1 == 0 || v2 == 0) {
        img[pos - 1] = 0;
      } else {
        const int dst[2] = {v1, v2};
        img[pos - 1] = lex_rank(dst, sizes_dst);
      }
    }
  }
  return FMorphism(n, std::move(img));
}

FMorphism wedge_all(std::span<const FMorphism> fs) {
  FMorphism acc = FMorphism::identity(0);
  for (const auto& f : fs) acc = wedge(acc, f);
  return acc;
}

FMorphism smash_all(std::span<const FMorphism> fs) {
  FMorphism acc = FMorphism::identity(1);
  for (const auto& f : fs) acc = smash(acc, f);
  return acc;
}

std::pair<FMorphism, FMorphism> factor_projection_effective(const FMorphism& phi) {
  // Stable sort of the surviving points by value; slot order defines pi.
  std::vector<int> survivors;
  for (int i = 1; i <= phi.source(); ++i)
    if (phi(i) != 0) survivors.push_back(i);
  std::stable_sort(survivors.begin(), survivors.end(),
                   [&](int a, int b) { return phi(a) < phi(b); });
  int k = static_cast<int>(survivors.size());
  std::vector<int> psi_img(k);
  std::vector<int> pi_img(phi.source(), 0);
  for (int t = 0; t < k; ++t) {
    psi_img[t] = phi(survivors[t]);
    pi_img[survivors[t] - 1] = t + 1;
  }
  FMorphism psi(phi.target(), std::move(psi_img));
  FMorphism pi(k, std::move(pi_img));
  return {psi, pi};
}

std::pair<FMorphism, Permutation> order_effective(const FMorphism& psi) {
  if (!psi.is_effective())
    throw std::invalid_argument("order_effective: morphism not effective");
  std::vector<int> idx(psi.source());
  std::iota(idx.begin(), idx.end(), 1);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return psi(a) < psi(b); });
  // psi = ordered . tau with tau(i) = slot of i in the sorted order
  std::vector<int> ordered_img(psi.source());
  std::vector<int> tau_img(psi.source());
  for (int t = 1; t <= psi.source(); ++t) {
    ordered_img[t - 1] = psi(idx[t - 1]);
    tau_img[idx[t - 1] - 1] = t;
  }
  return {FMorphism(psi.target(), std::move(ordered_img)),
          Permutation(std::move(tau_img))};
}

std::vector<Permutation> sigma_phi_subgroup(const FMorphism& phi) {
  if (!phi.is_injection())
    throw std::invalid_argument("sigma_phi_subgroup: morphism not an injection");
  std::vector<char> in_image(phi.target() + 1, 0);
  for (int v : phi.image()) in_image[v] = 1;
  std::vector<Permutation> out;
  for (auto& sigma : Permutation::all(phi.target())) {
    bool ok = true;
    for (int j = 1; j <= phi.target() && ok; ++j)
      if (in_image[j] && !in_image[sigma(j)]) ok = false;
    if (ok) out.push_back(sigma);
  }
  return out;
}

std::vector<Permutation> sigma_psi_group(const FMorphism& psi) {
  if (!psi.is_ordered_effective())
    throw std::invalid_argument("sigma_psi_group: morphism not ordered effective");
  const int m = psi.source();
  std::vector<std::vector<Permutation>> blocks;
  std::vector<int> offsets;
  int off = 0;
  for (int j = 1; j <= psi.target(); ++j) {
    int r = psi.fiber_size(j);
    blocks.push_back(Permutation::all(r));
    offsets.push_back(off);
    off += r;
  }
  std::vector<Permutation> out;
  std::vector<size_t> pick(blocks.size(), 0);
  while (true) {
    std::vector<int> img(m);
    std::iota(img.begin(), img.end(), 1);
    for (size_t b = 0; b < blocks.size(); ++b) {
      const Permutation& p = blocks[b][pick[b]];
      for (int t = 1; t <= p.degree(); ++t)
        img[offsets[b] + t - 1] = offsets[b] + p(t);
    }
    out.push_back(Permutation(std::move(img)));
    size_t b = 0;
    while (b < blocks.size() && ++pick[b] == blocks[b].size()) pick[b++] = 0;
    if (b == blocks.size()) break;
  }
  return out;
}

std::vector<FMorphism> enumerate_hom(int m, int n, Subcat which) {
  std::vector<FMorphism> out;
  std::vector<int> img(m, 0);
  while (true) {
    FMorphism phi(n, img);
    bool keep = true;
    switch (which) {
      case Subcat::F: break;
      case Subcat::Pi: {
        for (int j = 1; j <= n && keep; ++j)
          if (phi.fiber_size(j) > 1) keep = false;
        break;
      }
      case Subcat::Upsilon: keep = phi.is_projection(); break;
      case Subcat::E: keep = phi.is_ordered_effective(); break;
    }
    if (keep) out.push_back(std::move(phi));
    int i = 0;
    while (i < m && ++img[i] > n) img[i++] = 0;
    if (i == m) break;
  }
  return out;
}

}  // namespace ringops
