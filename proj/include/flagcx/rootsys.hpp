#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flagcx/scalar.hpp"

namespace flagcx {

enum class Family { A, B, C, D, G };

struct LieType {
  Family family;
  int rank;

  // Throws std::invalid_argument unless the family admits this rank.
  void validate() const;
  std::string name() const;  // e.g. "B2"
  static LieType parse(std::string_view family, int rank);
  friend bool operator==(const LieType&, const LieType&) = default;
};

// Integer coordinates in the simple-root basis.
struct Root {
  std::vector<int> coeffs;

  int height() const;
  bool is_positive() const;
  bool is_negative() const;
  Root operator-() const;
  friend Root operator+(const Root& a, const Root& b);
  friend Root operator-(const Root& a, const Root& b) { return a + (-b); }
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

class RootSystem {
 public:
  explicit RootSystem(LieType type);

  const LieType& lie_type() const { return type_; }
  int rank() const { return type_.rank; }

  // Roots are indexed 0..2N-1: positives in (height, lex) order, then index i+N = -(root i).
  int num_positive() const { return num_pos_; }
  int num_roots() const { return 2 * num_pos_; }
  const Root& root(int i) const { return roots_[i]; }
  const std::vector<Root>& roots() const { return roots_; }
  std::vector<Root> positive_roots() const;
  int negate(int i) const { return i < num_pos_ ? i + num_pos_ : i - num_pos_; }
  bool is_positive(int i) const { return i < num_pos_; }

  std::optional<int> index_of(const Root& r) const;
  int index_or_throw(const Root& r) const;  // std::invalid_argument on non-roots
  int sum_index(int i, int j) const { return add_[i * num_roots() + j]; }  // -1 if not a root

  Root simple_root(int i) const;
  const std::vector<std::vector<int>>& symmetrized_cartan() const { return sym_; }

  Rational pairing(const Root& a, const Root& b) const;
  int pairing_int(const Root& a, const Root& b) const;
  // 2<gamma,alpha>/<gamma,gamma>; integral for roots gamma.
  int coroot_pairing(const Root& gamma, const Root& alpha) const;
  int length2(int i) const { return len2_[i]; }

  // Largest p with beta - p*alpha a root (p = 0 if beta - alpha is not).
  int string_p(int alpha, int beta) const;

 private:
  void check_dim(const Root& r) const;

  LieType type_;
  int num_pos_ = 0;
  std::vector<std::vector<int>> sym_;
  std::vector<Root> roots_;
  std::vector<int> len2_;
  std::map<std::vector<int>, int> index_;
  std::vector<int> add_;
};

std::shared_ptr<const RootSystem> build_root_system(LieType type);

// Parabolic data: theta is a set of 0-based simple-root indices.
class FlagSpec {
 public:
  FlagSpec(std::shared_ptr<const RootSystem> rs, std::vector<int> theta);

  const RootSystem& root_system() const { return *rs_; }
  const std::shared_ptr<const RootSystem>& root_system_ptr() const { return rs_; }
  const std::vector<int>& theta() const { return theta_; }
  std::vector<Root> theta_roots() const;
  bool is_maximal() const { return theta_.empty(); }
  bool is_trivial() const { return static_cast<int>(theta_.size()) == rs_->rank(); }
  // True when r lies in span(theta), i.e. r is a root of the Levi factor.
  bool in_theta_span(const Root& r) const;

 private:
  std::shared_ptr<const RootSystem> rs_;
  std::vector<int> theta_;
};

// Indices (into root_system().roots()) of Pi^- \ <Theta>^-, ordered like their negatives.
std::vector<int> complement_indices(const FlagSpec& fs);
std::vector<Root> complement_roots(const FlagSpec& fs);

// λ-coordinate model for A/B/C/D (Euclidean up to a global factor 2 for B).
bool has_lambda_model(const LieType& t);
int lambda_dim(const LieType& t);
std::vector<int> to_lambda(const LieType& t, const Root& r);
std::optional<Root> from_lambda(const LieType& t, const std::vector<int>& v);

// λ-notation for classical types ("λ2-λ1", "-2λ3"); α/β notation for G2.
std::string format_root(const LieType& t, const Root& r);
// Inverse of format_root for a single root; also accepts 'l' for λ, 'a'/'b' for α/β.
Root parse_root(const LieType& t, std::string_view text, int column = 1);
// Comma-separated list of simple roots, 1-based Σ-indices, "all", or empty.
std::vector<int> parse_theta(const LieType& t, std::string_view text);

}  // namespace flagcx
