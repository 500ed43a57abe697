#include "gorstab/wpoly.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

namespace gorstab {

// ---------------------------------------------------------------- rings

WeightedRing::WeightedRing(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.size() != weights_.size())
    throw std::invalid_argument("ring: names and weights differ in length");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (weights_[i] <= 0)
      throw std::invalid_argument("ring: weight of " + names_[i] + " must be positive");
    if (names_[i].empty()) throw std::invalid_argument("ring: empty variable name");
    if (!seen.insert(names_[i]).second)
      throw std::invalid_argument("ring: duplicate variable " + names_[i]);
  }
}

namespace {
std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}
}  // namespace

WeightedRing WeightedRing::parse(std::string_view decl) {
  std::vector<std::string> names;
  std::vector<int> weights;
  std::size_t pos = 0;
  while (pos <= decl.size()) {
    auto comma = decl.find(',', pos);
    auto item = trim(decl.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                        : comma - pos));
    if (!item.empty()) {
      auto colon = item.find(':');
      if (colon == std::string::npos) {
        names.push_back(item);
        weights.push_back(1);
      } else {
        names.push_back(trim(item.substr(0, colon)));
        auto w = trim(item.substr(colon + 1));
        try {
          std::size_t used = 0;
          weights.push_back(std::stoi(w, &used));
          if (used != w.size()) throw std::invalid_argument(w);
        } catch (const std::exception&) {
          throw std::invalid_argument("ring: malformed weight '" + w + "'");
        }
      }
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (names.empty()) throw std::invalid_argument("ring: no variables declared");
  return WeightedRing(std::move(names), std::move(weights));
}

std::optional<std::size_t> WeightedRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t WeightedRing::require_index(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  return *i;
}

std::string WeightedRing::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) out << ", ";
    out << names_[i] << ':' << weights_[i];
  }
  return out.str();
}

RingPtr make_ring(std::vector<std::string> names, std::vector<int> weights) {
  return std::make_shared<const WeightedRing>(std::move(names), std::move(weights));
}

RingPtr make_ring(std::string_view decl) {
  return std::make_shared<const WeightedRing>(WeightedRing::parse(decl));
}

RingPtr ring_p112() {
  static const RingPtr r = make_ring({"x0", "x1", "y"}, {1, 1, 2});
  return r;
}

RingPtr ring_p2() {
  static const RingPtr r = make_ring({"y0", "y1", "y2"}, {1, 1, 1});
  return r;
}

RingPtr ring_local() {
  static const RingPtr r = make_ring({"x", "y"}, {1, 1});
  return r;
}

// ---------------------------------------------------------------- WPoly

WPoly::WPoly(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("polynomial without ring");
}

WPoly::WPoly(RingPtr ring, const Rational& constant) : WPoly(std::move(ring)) {
  if (!gorstab::is_zero(constant)) terms_.emplace(Exponent(ring_->size(), 0), constant);
}

WPoly WPoly::variable(RingPtr ring, std::size_t index) {
  Exponent e(ring->size(), 0);
  e.at(index) = 1;
  return monomial(std::move(ring), std::move(e));
}

WPoly WPoly::variable(RingPtr ring, std::string_view name) {
  auto i = ring->require_index(name);
  return variable(std::move(ring), i);
}

WPoly WPoly::monomial(RingPtr ring, Exponent exponent, Rational coeff) {
  if (exponent.size() != ring->size()) throw RingMismatch("exponent length mismatch");
  WPoly p(std::move(ring));
  if (!gorstab::is_zero(coeff)) p.terms_.emplace(std::move(exponent), std::move(coeff));
  return p;
}

bool WPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

Rational WPoly::constant_term() const { return coefficient(Exponent(ring_->size(), 0)); }

Rational WPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void WPoly::add_term(const Exponent& e, const Rational& c) {
  if (gorstab::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (gorstab::is_zero(it->second)) terms_.erase(it);
  }
}

const std::pair<const Exponent, Rational>& WPoly::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return *terms_.rbegin();
}

int WPoly::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int WPoly::min_degree_in(std::size_t var) const {
  if (terms_.empty()) return -1;
  int d = terms_.begin()->first[var];
  for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
  return d;
}

WPoly WPoly::coefficient_in(std::size_t var, int k) const {
  WPoly out(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != k) continue;
    Exponent f = e;
    f[var] = 0;
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

int WPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

int WPoly::order() const {
  if (terms_.empty()) throw DegreeUndefined("order of the zero polynomial");
  int d = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) d = std::min(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

WPoly WPoly::homogeneous_part(int k) const {
  WPoly out(ring_);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) == k) out.terms_.emplace(e, c);
  return out;
}

Rational WPoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != ring_->size()) throw RingMismatch("evaluation point has wrong length");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= pow(point[i], static_cast<unsigned>(e[i]));
    sum += t;
  }
  return sum;
}

void WPoly::require_same_ring(const WPoly& other) const {
  if (ring_ != other.ring_ && !(*ring_ == *other.ring_))
    throw RingMismatch("polynomials live in different rings: [" + ring_->to_string() + "] vs [" +
                       other.ring_->to_string() + "]");
}

WPoly WPoly::operator-() const {
  WPoly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

WPoly& WPoly::operator+=(const WPoly& other) {
  require_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

WPoly& WPoly::operator-=(const WPoly& other) {
  require_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

WPoly operator*(const WPoly& a, const WPoly& b) {
  a.require_same_ring(b);
  WPoly out(a.ring_);
  Exponent e(a.ring_->size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

WPoly& WPoly::operator*=(const WPoly& other) { return *this = *this * other; }

WPoly& WPoly::operator*=(const Rational& c) {
  if (gorstab::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

bool operator==(const WPoly& a, const WPoly& b) {
  if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_)) return false;
  return a.terms_ == b.terms_;
}

WPoly WPoly::monic() const {
  if (terms_.empty()) return *this;
  Rational inv = 1 / leading_term().second;
  return *this * inv;
}

WPoly WPoly::rebased(RingPtr ring) const {
  if (ring->size() != ring_->size()) throw RingMismatch("rebase to ring of different size");
  WPoly out(std::move(ring));
  out.terms_ = terms_;
  return out;
}

WPoly pow(const WPoly& p, unsigned exponent) {
  WPoly result(p.ring(), 1);
  WPoly b = p;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent) b = b * b;
  }
  return result;
}

// ---------------------------------------------------------------- degrees

int weighted_degree_of(const WeightedRing& ring, const Exponent& e) {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * ring.weight(i);
  return d;
}

std::optional<int> weighted_degree(const WPoly& p) {
  if (p.is_zero()) throw DegreeUndefined("weighted degree of the zero polynomial");
  std::optional<int> d;
  for (const auto& [e, c] : p.terms()) {
    int k = weighted_degree_of(*p.ring(), e);
    if (!d) d = k;
    else if (*d != k) return std::nullopt;
  }
  return d;
}

bool is_homogeneous(const WPoly& p) { return p.is_zero() || weighted_degree(p).has_value(); }

// ---------------------------------------------------------------- substitution

WPoly substitute(const WPoly& p, const std::vector<WPoly>& images) {
  if (images.size() != p.ring()->size())
    throw RingMismatch("substitution must assign every variable");
  const RingPtr& target = images.front().ring();
  for (const auto& im : images)
    if (im.ring() != target && !(*im.ring() == *target))
      throw RingMismatch("substitution images live in different rings");

  // Cache powers of each image; exponents stay small.
  std::vector<std::vector<WPoly>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    int top = p.degree_in(i);
    powers[i].reserve(std::max(top, 0) + 1);
    powers[i].emplace_back(target, 1);
    for (int k = 1; k <= top; ++k) powers[i].push_back(powers[i].back() * images[i]);
  }
  WPoly out(target);
  for (const auto& [e, c] : p.terms()) {
    WPoly t(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= powers[i][e[i]];
    out += t;
  }
  return out;
}

WPoly substitute(const WPoly& p, const std::map<std::string, WPoly>& assignment) {
  const auto& ring = *p.ring();
  std::optional<RingPtr> target;
  for (const auto& [name, img] : assignment) {
    ring.require_index(name);
    if (!target) target = img.ring();
    else if (!(**target == *img.ring())) throw RingMismatch("substitution images live in different rings");
  }
  std::vector<WPoly> images;
  images.reserve(ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i) {
    auto it = assignment.find(ring.name(i));
    if (it != assignment.end()) {
      images.push_back(it->second);
    } else {
      if (target && !(**target == ring))
        throw RingMismatch("variable " + ring.name(i) + " left unassigned in a ring change");
      images.push_back(WPoly::variable(p.ring(), i));
    }
  }
  if (images.empty()) return p;
  return substitute(p, images);
}

WPoly partial_derivative(const WPoly& p, std::size_t var) {
  if (var >= p.ring()->size()) throw std::out_of_range("derivative variable out of range");
  WPoly out(p.ring());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponent f = e;
    f[var] -= 1;
    out.add_term(f, c * e[var]);
  }
  return out;
}

WPoly partial_derivative(const WPoly& p, std::string_view var) {
  return partial_derivative(p, p.ring()->require_index(var));
}

// ---------------------------------------------------------------- division

std::optional<WPoly> exact_divide(const WPoly& a, const WPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (!(*a.ring() == *b.ring())) throw RingMismatch("division across rings");
  WPoly quotient(a.ring());
  WPoly rest = a;
  const auto& [lb, cb] = b.leading_term();
  const std::size_t n = lb.size();
  Exponent shift(n);
  while (!rest.is_zero()) {
    const auto& [lr, cr] = rest.leading_term();
    for (std::size_t i = 0; i < n; ++i) {
      shift[i] = lr[i] - lb[i];
      if (shift[i] < 0) return std::nullopt;
    }
    WPoly t = WPoly::monomial(a.ring(), shift, cr / cb);
    quotient += t;
    rest -= t * b;
  }
  return quotient;
}

WPoly divide_exact(const WPoly& a, const WPoly& b) {
  auto q = exact_divide(a, b);
  if (!q) throw std::domain_error("inexact polynomial division");
  return *std::move(q);
}

// ---------------------------------------------------------------- printing

std::string to_string(const WPoly& p) {
  if (p.is_zero()) return "0";
  const auto& ring = *p.ring();
  std::vector<const std::pair<const Exponent, Rational>*> order;
  for (const auto& t : p.terms()) order.push_back(&t);
  std::sort(order.begin(), order.end(), [&](auto* a, auto* b) {
    int da = weighted_degree_of(ring, a->first), db = weighted_degree_of(ring, b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto* t : order) {
    const auto& [e, c] = *t;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool is_const = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
    bool need_star = false;
    if (is_const || mag != 1) {
      out << mag.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (need_star) out << '*';
      out << ring.name(i);
      if (e[i] > 1) out << '^' << e[i];
      need_star = true;
    }
  }
  return out.str();
}

}  // namespace gorstab
