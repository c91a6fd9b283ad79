#include "dcoset/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <unordered_set>

#include "dcoset/errors.hpp"

namespace dcoset {

std::string to_string(CartanType type) {
  switch (type) {
    case CartanType::A:
      return "A";
    case CartanType::B:
      return "B";
    case CartanType::I2:
      return "I2";
  }
  return "?";
}

CartanType parse_cartan(const std::string& text) {
  if (text == "A" || text == "a") return CartanType::A;
  if (text == "B" || text == "b") return CartanType::B;
  if (text == "I2" || text == "i2" || text == "I") return CartanType::I2;
  throw InvalidArgument("unknown Cartan type '" + text + "'");
}

// ---------------------------------------------------------------------------
// ParabolicSubset

ParabolicSubset::ParabolicSubset(std::initializer_list<int> indices)
    : ParabolicSubset(std::span<const int>(indices.begin(), indices.size())) {}

ParabolicSubset::ParabolicSubset(std::span<const int> indices) {
  for (int i : indices) {
    if (i < 0 || i > kMaxIndex) throw InvalidArgument("simple index out of range: " + std::to_string(i));
    bits_ |= (1u << i);
  }
}

bool ParabolicSubset::contains(int index) const {
  return index >= 0 && index <= kMaxIndex && ((bits_ >> index) & 1u) != 0;
}

int ParabolicSubset::size() const { return std::popcount(bits_); }

std::vector<int> ParabolicSubset::indices() const {
  std::vector<int> out;
  for (int i = 0; i <= kMaxIndex; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

ParabolicSubset ParabolicSubset::with(int index) const {
  if (index < 0 || index > kMaxIndex) throw InvalidArgument("simple index out of range: " + std::to_string(index));
  return from_bits(bits_ | (1u << index));
}

ParabolicSubset ParabolicSubset::without(int index) const {
  if (index < 0 || index > kMaxIndex) return *this;
  return from_bits(bits_ & ~(1u << index));
}

// ---------------------------------------------------------------------------
// CoxeterSystem

CoxeterSystem CoxeterSystem::type_a(int rank) {
  if (rank < 0 || rank > ParabolicSubset::kMaxIndex - 1)
    throw InvalidArgument("type A rank out of range: " + std::to_string(rank));
  return CoxeterSystem(CartanType::A, rank, 0);
}

CoxeterSystem CoxeterSystem::type_b(int rank) {
  if (rank < 0 || rank > ParabolicSubset::kMaxIndex)
    throw InvalidArgument("type B rank out of range: " + std::to_string(rank));
  return CoxeterSystem(CartanType::B, rank, 0);
}

CoxeterSystem CoxeterSystem::dihedral(int bond) {
  if (bond < 3) throw InvalidArgument("dihedral bond must be at least 3");
  return CoxeterSystem(CartanType::I2, 2, bond);
}

int CoxeterSystem::degree() const {
  switch (cartan_) {
    case CartanType::A:
      return rank_ + 1;
    case CartanType::B:
      return rank_;
    case CartanType::I2:
      return bond_;
  }
  return 0;
}

int CoxeterSystem::min_index() const { return cartan_ == CartanType::B ? 0 : 1; }

int CoxeterSystem::max_index() const { return cartan_ == CartanType::B ? rank_ - 1 : rank_; }

bool CoxeterSystem::valid_index(int index) const { return index >= min_index() && index <= max_index(); }

bool CoxeterSystem::valid_subset(ParabolicSubset subset) const { return subset.subset_of(all_simples()); }

std::vector<int> CoxeterSystem::indices() const {
  std::vector<int> out;
  for (int i = min_index(); i <= max_index(); ++i) out.push_back(i);
  return out;
}

ParabolicSubset CoxeterSystem::all_simples() const {
  auto idx = indices();
  return ParabolicSubset(std::span<const int>(idx));
}

int CoxeterSystem::coxeter_entry(int i, int j) const {
  if (!valid_index(i) || !valid_index(j)) throw InvalidArgument("simple index out of range");
  if (i == j) return 1;
  if (cartan_ == CartanType::I2) return bond_;
  if (std::abs(i - j) > 1) return 2;
  if (cartan_ == CartanType::B && std::min(i, j) == 0) return 4;
  return 3;
}

std::uint64_t CoxeterSystem::group_order() const {
  std::uint64_t order = 1;
  switch (cartan_) {
    case CartanType::A:
      for (int k = 2; k <= rank_ + 1; ++k) order *= static_cast<std::uint64_t>(k);
      return order;
    case CartanType::B:
      for (int k = 1; k <= rank_; ++k) order *= 2u * static_cast<std::uint64_t>(k);
      return order;
    case CartanType::I2:
      return 2u * static_cast<std::uint64_t>(bond_);
  }
  return order;
}

Element CoxeterSystem::identity() const {
  std::vector<int> images(static_cast<std::size_t>(degree()));
  for (int x = 0; x < degree(); ++x) images[x] = cartan_ == CartanType::I2 ? x : x + 1;
  return Element(*this, std::move(images));
}

Element CoxeterSystem::generator(int index) const {
  if (!valid_index(index)) throw InvalidArgument("simple index " + std::to_string(index) + " invalid for " + name());
  Element id = identity();
  std::vector<int> images(id.images().begin(), id.images().end());
  switch (cartan_) {
    case CartanType::A:
      std::swap(images[index - 1], images[index]);
      break;
    case CartanType::B:
      if (index == 0)
        images[0] = -1;
      else
        std::swap(images[index - 1], images[index]);
      break;
    case CartanType::I2:
      for (int x = 0; x < bond_; ++x) {
        int y = index == 1 ? -x : 1 - x;
        images[x] = ((y % bond_) + bond_) % bond_;
      }
      break;
  }
  return Element(*this, std::move(images));
}

Element CoxeterSystem::from_word(std::span<const int> word) const {
  Element w = identity();
  for (int i : word) w = w * generator(i);
  return w;
}

std::string CoxeterSystem::name() const {
  if (cartan_ == CartanType::I2) return "I2(" + std::to_string(bond_) + ")";
  return to_string(cartan_) + std::to_string(rank_);
}

// ---------------------------------------------------------------------------
// Element

Element::Element(const CoxeterSystem& system, std::vector<int> images) : system_(system), images_(std::move(images)) {
  const int n = system.degree();
  if (static_cast<int>(images_.size()) != n)
    throw InvalidArgument("image list has size " + std::to_string(images_.size()) + ", expected " + std::to_string(n));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : images_) {
    int slot = 0;
    switch (system.cartan()) {
      case CartanType::A:
        if (v < 1 || v > n) throw InvalidArgument("image out of range in type A element");
        slot = v - 1;
        break;
      case CartanType::B:
        if (v == 0 || std::abs(v) > n) throw InvalidArgument("image out of range in type B element");
        slot = std::abs(v) - 1;
        break;
      case CartanType::I2:
        if (v < 0 || v >= n) throw InvalidArgument("image out of range in dihedral element");
        slot = v;
        break;
    }
    if (seen[slot]) throw InvalidArgument("image list is not a permutation");
    seen[slot] = 1;
  }
  if (system.cartan() == CartanType::I2) {
    // Dihedral symmetries are affine maps x -> c +- x.
    int c = images_[0];
    int step = (images_[1 % n] - c + n) % n;
    if (step != 1 && step != n - 1) throw InvalidArgument("image list is not a dihedral symmetry");
    for (int x = 0; x < n; ++x)
      if (images_[x] != ((c + step * x) % n + n) % n) throw InvalidArgument("image list is not a dihedral symmetry");
  }
}

int Element::operator()(int x) const {
  switch (system_.cartan()) {
    case CartanType::A:
      return images_[x - 1];
    case CartanType::B:
      if (x == 0) return 0;
      return x > 0 ? images_[x - 1] : -images_[-x - 1];
    case CartanType::I2:
      return images_[x];
  }
  return x;
}

Element Element::operator*(const Element& other) const {
  require_same_system(*this, other);
  std::vector<int> out(images_.size());
  const int n = static_cast<int>(images_.size());
  for (int k = 0; k < n; ++k) {
    int x = system_.cartan() == CartanType::I2 ? k : k + 1;
    out[k] = (*this)(other(x));
  }
  return Element(system_, std::move(out));
}

Element Element::inverse() const {
  const int n = static_cast<int>(images_.size());
  std::vector<int> out(images_.size());
  for (int k = 0; k < n; ++k) {
    int v = images_[k];
    switch (system_.cartan()) {
      case CartanType::A:
        out[v - 1] = k + 1;
        break;
      case CartanType::B:
        out[std::abs(v) - 1] = v > 0 ? k + 1 : -(k + 1);
        break;
      case CartanType::I2:
        out[v] = k;
        break;
    }
  }
  return Element(system_, std::move(out));
}

int Element::length() const {
  const int n = static_cast<int>(images_.size());
  int len = 0;
  switch (system_.cartan()) {
    case CartanType::A:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (images_[i] > images_[j]) ++len;
      return len;
    case CartanType::B:
      // inv + neg + nsp
      for (int i = 0; i < n; ++i) {
        if (images_[i] < 0) ++len;
        for (int j = i + 1; j < n; ++j) {
          if (images_[i] > images_[j]) ++len;
          if (images_[i] + images_[j] < 0) ++len;
        }
      }
      return len;
    case CartanType::I2: {
      int c = images_[0];
      bool rotation = (images_[1] - c + n) % n == 1;
      if (rotation) return 2 * std::min(c, n - c);
      return std::min(std::abs(2 * c - 1), 2 * (n - c) + 1);
    }
  }
  return len;
}

bool Element::is_identity() const { return *this == system_.identity(); }

// ---------------------------------------------------------------------------
// Free functions

void require_same_system(const Element& a, const Element& b) {
  if (a.system() != b.system())
    throw SystemMismatch("elements of " + a.system().name() + " and " + b.system().name());
}

Element multiply(const Element& w, const Element& v) { return w * v; }

int length(const Element& w) { return w.length(); }

bool is_left_descent(const Element& w, int index) {
  return (w.system().generator(index) * w).length() < w.length();
}

bool is_right_descent(const Element& w, int index) {
  return (w * w.system().generator(index)).length() < w.length();
}

ParabolicSubset left_descents(const Element& w) {
  ParabolicSubset out;
  for (int i : w.system().indices())
    if (is_left_descent(w, i)) out = out.with(i);
  return out;
}

ParabolicSubset right_descents(const Element& w) {
  ParabolicSubset out;
  for (int i : w.system().indices())
    if (is_right_descent(w, i)) out = out.with(i);
  return out;
}

std::vector<int> reduced_word(const Element& w) {
  std::vector<int> word;
  Element rest = w;
  const auto& sys = w.system();
  while (!rest.is_identity()) {
    for (int i : sys.indices()) {
      if (is_left_descent(rest, i)) {
        word.push_back(i);
        rest = sys.generator(i) * rest;
        break;
      }
    }
  }
  return word;
}

Element star_product(const Element& w, const Element& v) {
  require_same_system(w, v);
  Element out = w;
  for (int i : reduced_word(v)) {
    Element next = out * w.system().generator(i);
    if (next.length() > out.length()) out = std::move(next);
  }
  return out;
}

bool bruhat_leq(const Element& w, const Element& v) {
  require_same_system(w, v);
  if (w.length() > v.length()) return false;
  std::unordered_set<Element> reachable{v.system().identity()};
  for (int i : reduced_word(v)) {
    Element s = v.system().generator(i);
    std::vector<Element> extended;
    for (const auto& x : reachable) extended.push_back(x * s);
    reachable.insert(extended.begin(), extended.end());
  }
  return reachable.contains(w);
}

Element conjugate(const Element& w, int index) { return w * w.system().generator(index) * w.inverse(); }

std::optional<int> as_simple(const Element& e) {
  if (e.length() != 1) return std::nullopt;
  for (int i : e.system().indices())
    if (e == e.system().generator(i)) return i;
  return std::nullopt;
}

std::vector<Element> all_elements(const CoxeterSystem& system, std::size_t cap) {
  if (system.group_order() > cap)
    throw BudgetExceeded(system.name() + " has " + std::to_string(system.group_order()) +
                         " elements, above the enumeration cap of " + std::to_string(cap));
  std::vector<Element> order{system.identity()};
  std::unordered_set<Element> seen{system.identity()};
  std::vector<Element> gens;
  for (int i : system.indices()) gens.push_back(system.generator(i));
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& s : gens) {
      Element next = order[head] * s;
      if (seen.insert(next).second) order.push_back(std::move(next));
    }
  }
  return order;
}

std::string format_element(const Element& w) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (int v : w.images()) {
    if (!first) os << ',';
    first = false;
    os << v;
  }
  os << ']';
  return os.str();
}

namespace {

// Replaces the unicode minus sign with ASCII '-'.
std::string normalize_minus(const std::string& text) {
  std::string out;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text.compare(k, 3, "\xE2\x88\x92") == 0) {
      out.push_back('-');
      k += 2;
    } else {
      out.push_back(text[k]);
    }
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& body, std::size_t offset) {
  std::vector<int> out;
  std::size_t k = 0;
  while (k < body.size()) {
    while (k < body.size() && (body[k] == ' ' || body[k] == ',' || body[k] == '\t')) ++k;
    if (k >= body.size()) break;
    std::size_t start = k;
    if (body[k] == '-' || body[k] == '+') ++k;
    while (k < body.size() && std::isdigit(static_cast<unsigned char>(body[k]))) ++k;
    if (k == start || (k == start + 1 && !std::isdigit(static_cast<unsigned char>(body[start]))))
      throw ParseError("expected integer", offset + start);
    out.push_back(std::stoi(body.substr(start, k - start)));
  }
  return out;
}

}  // namespace

Element parse_element(const CoxeterSystem& system, const std::string& raw) {
  std::string text = normalize_minus(raw);
  auto open = text.find('[');
  auto close = text.rfind(']');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw ParseError("expected bracketed image list", 0);
  return Element(system, parse_int_list(text.substr(open + 1, close - open - 1), open + 1));
}

std::string format_word(std::span<const int> word) {
  std::ostringstream os;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) os << ' ';
    os << word[k];
  }
  return os.str();
}

std::vector<int> parse_word(const std::string& text) { return parse_int_list(text, 0); }

}  // namespace dcoset

std::size_t std::hash<dcoset::Element>::operator()(const dcoset::Element& w) const noexcept {
  std::size_t h = static_cast<std::size_t>(w.system().cartan()) * 1315423911u + static_cast<std::size_t>(w.system().rank());
  for (int v : w.images()) h = h * 1000003u ^ static_cast<std::size_t>(v + 64);
  return h;
}
