#include "flagcx/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "flagcx/errors.hpp"
#include "flagcx/matrix.hpp"

namespace flagcx {

void LieType::validate() const {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) throw std::invalid_argument("invalid rank " + std::to_string(rank) + " for family " + name().substr(0, 1));
}

std::string LieType::name() const {
  static const char* letters = "ABCDG";
  return std::string(1, letters[static_cast<int>(family)]) + std::to_string(rank);
}

LieType LieType::parse(std::string_view family, int rank) {
  if (family.size() != 1) throw std::invalid_argument("unknown family '" + std::string(family) + "'");
  Family f;
  switch (std::toupper(static_cast<unsigned char>(family[0]))) {
    case 'A': f = Family::A; break;
    case 'B': f = Family::B; break;
    case 'C': f = Family::C; break;
    case 'D': f = Family::D; break;
    case 'G': f = Family::G; break;
    default: throw std::invalid_argument("unsupported family '" + std::string(family) + "'");
  }
  LieType t{f, rank};
  t.validate();
  return t;
}

int Root::height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

bool Root::is_positive() const {
  return std::any_of(coeffs.begin(), coeffs.end(), [](int c) { return c > 0; }) &&
         std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c >= 0; });
}

bool Root::is_negative() const { return (-*this).is_positive(); }

Root Root::operator-() const {
  Root r = *this;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

Root operator+(const Root& a, const Root& b) {
  if (a.coeffs.size() != b.coeffs.size()) throw std::invalid_argument("root dimension mismatch");
  Root r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

namespace {

// Half squared lengths of the simple roots (short roots have squared length 2).
std::vector<int> simple_half_lengths(const LieType& t) {
  const int l = t.rank;
  std::vector<int> d(l, 1);
  if (t.family == Family::B) std::fill(d.begin(), d.end() - 1, 2);
  if (t.family == Family::C) d[l - 1] = 2;
  if (t.family == Family::G) d = {3, 1};
  return d;
}

std::vector<std::pair<int, int>> dynkin_edges(const LieType& t) {
  const int l = t.rank;
  std::vector<std::pair<int, int>> e;
  if (t.family == Family::D) {
    for (int i = 0; i + 2 < l; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(l - 3, l - 1);
  } else {
    for (int i = 0; i + 1 < l; ++i) e.emplace_back(i, i + 1);
  }
  return e;
}

// Height-major; within a height, larger coefficient vectors first so that α1 precedes α2.
bool root_order(const Root& a, const Root& b) {
  int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  return a.coeffs > b.coeffs;
}

}  // namespace

RootSystem::RootSystem(LieType type) : type_(type) {
  type_.validate();
  const int l = type_.rank;
  const auto d = simple_half_lengths(type_);
  sym_.assign(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) sym_[i][i] = 2 * d[i];
  for (auto [i, j] : dynkin_edges(type_)) sym_[i][j] = sym_[j][i] = -std::max(d[i], d[j]);

  std::map<std::vector<int>, int> found;
  std::vector<Root> pos;
  std::vector<Root> layer;
  for (int i = 0; i < l; ++i) {
    Root r{std::vector<int>(l, 0)};
    r.coeffs[i] = 1;
    layer.push_back(r);
  }
  // String rule: r + α_s is a root iff p - <r, α_s^∨> > 0.
  while (!layer.empty()) {
    for (const auto& r : layer) {
      found[r.coeffs] = 1;
      pos.push_back(r);
    }
    std::vector<Root> next;
    for (const auto& r : layer) {
      for (int s = 0; s < l; ++s) {
        Root alpha = simple_root(s);
        int p = 0;
        Root down = r - alpha;
        while (found.count(down.coeffs)) {
          ++p;
          down = down - alpha;
        }
        int q = p - coroot_pairing(alpha, r);
        Root up = r + alpha;
        if (q > 0 && !found.count(up.coeffs) &&
            std::find(next.begin(), next.end(), up) == next.end())
          next.push_back(up);
      }
    }
    layer = std::move(next);
  }
  std::sort(pos.begin(), pos.end(), root_order);
  num_pos_ = static_cast<int>(pos.size());
  roots_ = pos;
  for (const auto& r : pos) roots_.push_back(-r);
  for (int i = 0; i < num_roots(); ++i) {
    index_[roots_[i].coeffs] = i;
    len2_.push_back(pairing_int(roots_[i], roots_[i]));
  }
  add_.assign(static_cast<std::size_t>(num_roots()) * num_roots(), -1);
  for (int i = 0; i < num_roots(); ++i)
    for (int j = 0; j < num_roots(); ++j) {
      Root s = roots_[i] + roots_[j];
      auto it = index_.find(s.coeffs);
      if (it != index_.end()) add_[i * num_roots() + j] = it->second;
    }
}

std::vector<Root> RootSystem::positive_roots() const {
  return {roots_.begin(), roots_.begin() + num_pos_};
}

std::optional<int> RootSystem::index_of(const Root& r) const {
  if (static_cast<int>(r.coeffs.size()) != rank()) return std::nullopt;
  auto it = index_.find(r.coeffs);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::index_or_throw(const Root& r) const {
  check_dim(r);
  auto i = index_of(r);
  if (!i) throw std::invalid_argument("not a root of " + type_.name());
  return *i;
}

Root RootSystem::simple_root(int i) const {
  if (i < 0 || i >= rank()) throw std::out_of_range("simple root index");
  Root r{std::vector<int>(rank(), 0)};
  r.coeffs[i] = 1;
  return r;
}

void RootSystem::check_dim(const Root& r) const {
  if (static_cast<int>(r.coeffs.size()) != rank())
    throw std::invalid_argument("root has " + std::to_string(r.coeffs.size()) +
                                " coordinates, expected " + std::to_string(rank()));
}

int RootSystem::pairing_int(const Root& a, const Root& b) const {
  check_dim(a);
  check_dim(b);
  int s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (!a.coeffs[i]) continue;
    for (int j = 0; j < rank(); ++j) s += a.coeffs[i] * sym_[i][j] * b.coeffs[j];
  }
  return s;
}

Rational RootSystem::pairing(const Root& a, const Root& b) const { return Rational(pairing_int(a, b)); }

int RootSystem::coroot_pairing(const Root& gamma, const Root& alpha) const {
  int gg = pairing_int(gamma, gamma);
  if (gg == 0) throw std::invalid_argument("coroot of the zero vector");
  int num = 2 * pairing_int(gamma, alpha);
  if (num % gg != 0) throw InvariantViolation("non-integral coroot pairing");
  return num / gg;
}

int RootSystem::string_p(int alpha, int beta) const {
  int p = 0;
  Root down = roots_[beta] - roots_[alpha];
  while (index_.count(down.coeffs)) {
    ++p;
    down = down - roots_[alpha];
  }
  return p;
}

std::shared_ptr<const RootSystem> build_root_system(LieType type) {
  return std::make_shared<const RootSystem>(type);
}

FlagSpec::FlagSpec(std::shared_ptr<const RootSystem> rs, std::vector<int> theta)
    : rs_(std::move(rs)), theta_(std::move(theta)) {
  if (!rs_) throw std::invalid_argument("null root system");
  std::sort(theta_.begin(), theta_.end());
  theta_.erase(std::unique(theta_.begin(), theta_.end()), theta_.end());
  for (int i : theta_)
    if (i < 0 || i >= rs_->rank()) throw std::invalid_argument("theta index out of range");
}

std::vector<Root> FlagSpec::theta_roots() const {
  std::vector<Root> out;
  for (int i : theta_) out.push_back(rs_->simple_root(i));
  return out;
}

bool FlagSpec::in_theta_span(const Root& r) const {
  for (int i = 0; i < rs_->rank(); ++i)
    if (r.coeffs[i] != 0 && !std::binary_search(theta_.begin(), theta_.end(), i)) return false;
  return true;
}

std::vector<int> complement_indices(const FlagSpec& fs) {
  const auto& rs = fs.root_system();
  std::vector<int> out;
  for (int i = 0; i < rs.num_positive(); ++i)
    if (!fs.in_theta_span(rs.root(i))) out.push_back(rs.negate(i));
  return out;
}

std::vector<Root> complement_roots(const FlagSpec& fs) {
  std::vector<Root> out;
  for (int i : complement_indices(fs)) out.push_back(fs.root_system().root(i));
  return out;
}

bool has_lambda_model(const LieType& t) { return t.family != Family::G; }

int lambda_dim(const LieType& t) { return t.family == Family::A ? t.rank + 1 : t.rank; }

namespace {

std::vector<int> simple_in_lambda(const LieType& t, int i) {
  std::vector<int> v(lambda_dim(t), 0);
  const int l = t.rank;
  if (i < l - 1 || t.family == Family::A) {
    v[i] = 1;
    v[i + 1] = -1;
    return v;
  }
  switch (t.family) {
    case Family::B: v[l - 1] = 1; break;
    case Family::C: v[l - 1] = 2; break;
    case Family::D: v[l - 2] = 1; v[l - 1] = 1; break;
    default: throw std::logic_error("no λ-model");
  }
  return v;
}

}  // namespace

std::vector<int> to_lambda(const LieType& t, const Root& r) {
  if (!has_lambda_model(t)) throw Unsupported("no λ-model for " + t.name());
  std::vector<int> v(lambda_dim(t), 0);
  for (int i = 0; i < t.rank; ++i) {
    if (!r.coeffs[i]) continue;
    auto s = simple_in_lambda(t, i);
    for (int k = 0; k < lambda_dim(t); ++k) v[k] += r.coeffs[i] * s[k];
  }
  return v;
}

std::optional<Root> from_lambda(const LieType& t, const std::vector<int>& v) {
  if (!has_lambda_model(t)) throw Unsupported("no λ-model for " + t.name());
  const int n = lambda_dim(t), l = t.rank;
  if (static_cast<int>(v.size()) != n) return std::nullopt;
  QMatrix aug(n, l + 1);
  for (int i = 0; i < l; ++i) {
    auto s = simple_in_lambda(t, i);
    for (int k = 0; k < n; ++k) aug(k, i) = s[k];
  }
  for (int k = 0; k < n; ++k) aug(k, l) = v[k];
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == static_cast<std::size_t>(l)) return std::nullopt;
  Root r{std::vector<int>(l, 0)};
  for (std::size_t row = 0; row < piv.size(); ++row) {
    const Rational& c = aug(row, l);
    if (c.get_den() != 1) return std::nullopt;
    r.coeffs[piv[row]] = static_cast<int>(c.get_num().get_si());
  }
  return r;
}

namespace {

std::string term(int c, const std::string& sym, bool first) {
  std::string s;
  if (c < 0) s = "-";
  else if (!first) s = "+";
  int a = std::abs(c);
  if (a != 1) s += std::to_string(a);
  return s + sym;
}

}  // namespace

std::string format_root(const LieType& t, const Root& r) {
  std::string out;
  bool first = true;
  if (!has_lambda_model(t)) {
    const char* names[] = {"α", "β"};
    for (int i = 0; i < 2; ++i) {
      if (!r.coeffs[i]) continue;
      out += term(r.coeffs[i], names[i], first);
      first = false;
    }
    return out;
  }
  auto v = to_lambda(t, r);
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t k = 0; k < v.size(); ++k) {
      if ((pass == 0 && v[k] <= 0) || (pass == 1 && v[k] >= 0)) continue;
      out += term(v[k], "λ" + std::to_string(k + 1), first);
      first = false;
    }
  return out;
}

namespace {

// Columns count code points, so λ and α occupy one column each.
int code_points(std::string_view s) {
  return static_cast<int>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

class Cursor {
 public:
  Cursor(std::string_view s, int column) : s_(s), base_(column) {}
  bool done() const { return i_ >= s_.size(); }
  int column() const { return base_ + code_points(s_.substr(0, i_)); }
  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(std::string_view tok) {
    if (s_.substr(i_, tok.size()) == tok) {
      i_ += tok.size();
      return true;
    }
    return false;
  }
  std::optional<int> number() {
    std::size_t j = i_;
    while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
    if (j == i_) return std::nullopt;
    int v = std::stoi(std::string(s_.substr(i_, j - i_)));
    i_ = j;
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 1, column()); }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
  int base_;
};

// Parses "[+-][k]SYM..." into coefficients, where sym() recognizes one symbol and returns its slot.
template <class SymFn>
std::vector<int> parse_linear(Cursor& cur, int slots, SymFn sym) {
  std::vector<int> v(slots, 0);
  bool first = true;
  cur.skip_space();
  if (cur.done()) cur.fail("empty root expression");
  while (!cur.done()) {
    int sign = 1;
    if (cur.eat("-") || cur.eat("−")) sign = -1;
    else if (!cur.eat("+") && !first) cur.fail("expected '+' or '-'");
    cur.skip_space();
    int coef = cur.number().value_or(1);
    int slot = sym(cur);
    v[slot] += sign * coef;
    first = false;
    cur.skip_space();
  }
  return v;
}

}  // namespace

Root parse_root(const LieType& t, std::string_view text, int column) {
  Cursor cur(text, column);
  if (!has_lambda_model(t)) {
    auto c = parse_linear(cur, 2, [](Cursor& k) {
      if (k.eat("α") || k.eat("a")) return 0;
      if (k.eat("β") || k.eat("b")) return 1;
      k.fail("expected α or β");
    });
    Root r{c};
    RootSystem rs(t);
    if (!rs.index_of(r)) throw ParseError("'" + std::string(text) + "' is not a root of G2", 1, column);
    return r;
  }
  const int n = lambda_dim(t);
  auto v = parse_linear(cur, n, [n](Cursor& k) {
    if (!(k.eat("λ") || k.eat("l") || k.eat("L"))) k.fail("expected λ");
    int col = k.column();
    auto idx = k.number();
    if (!idx || *idx < 1 || *idx > n) throw ParseError("λ index out of range", 1, col);
    return *idx - 1;
  });
  auto r = from_lambda(t, v);
  if (!r || !RootSystem(t).index_of(*r))
    throw ParseError("'" + std::string(text) + "' is not a root of " + t.name(), 1, column);
  return *r;
}

std::vector<int> parse_theta(const LieType& t, std::string_view text) {
  std::vector<int> out;
  auto trim = [](std::string_view s, std::size_t& off) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
      s.remove_prefix(1);
      ++off;
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::size_t off0 = 0;
  auto whole = trim(text, off0);
  if (whole.empty() || whole == "∅" || whole == "none") return out;
  if (whole == "all") {
    for (int i = 0; i < t.rank; ++i) out.push_back(i);
    return out;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find_first_of(",;", pos);
    if (end == std::string_view::npos) end = text.size();
    std::size_t off = pos;
    auto item = trim(text.substr(pos, end - pos), off);
    const int col = code_points(text.substr(0, off)) + 1;
    if (item.empty()) throw ParseError("empty theta entry", 1, col);
    if (std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      int k = std::stoi(std::string(item));
      if (k < 1 || k > t.rank) throw ParseError("simple-root index out of range", 1, col);
      out.push_back(k - 1);
    } else {
      Root r = parse_root(t, item, col);
      int simple = -1;
      for (int i = 0; i < t.rank; ++i)
        if (r.coeffs[i] == 1 && r.height() == 1) simple = i;
      if (simple < 0) throw ParseError("'" + std::string(item) + "' is not a simple root", 1, col);
      out.push_back(simple);
    }
    pos = end + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace flagcx
