#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "skewlab/errors.hpp"

namespace skewlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Exact rational in lowest terms with the dyadic part split off:
// value = (num/den) · 2^exp2 with num, den odd and coprime, den > 0.
// Scaling by powers of two, the hot operation of the Rosita λ-action,
// is an O(1) exponent update this way; addition realigns exactly.
class DyadicRat {
 public:
  DyadicRat() : num_(0), den_(1), exp2_(0) {}
  DyadicRat(BigInt num, BigInt den);
  explicit DyadicRat(long long v) : DyadicRat(BigInt(v), BigInt(1)) {}

  bool is_zero() const { return num_ == 0; }
  DyadicRat operator-() const;
  DyadicRat operator+(const DyadicRat& o) const;
  DyadicRat operator-(const DyadicRat& o) const { return *this + (-o); }
  DyadicRat times_pow2(long long k) const;

  bool operator==(const DyadicRat& o) const {
    return exp2_ == o.exp2_ && num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const DyadicRat& o) const { return !(*this == o); }
  // representational order (canonical form makes it a valid total order)
  bool operator<(const DyadicRat& o) const {
    if (exp2_ != o.exp2_) return exp2_ < o.exp2_;
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  long long exp2() const { return exp2_; }

  BigRat to_rational() const;  // materializes 2^exp2
  std::string to_string() const;

 private:
  BigInt num_, den_;
  long long exp2_;
};

// The four closed-form infinite families, with exact element types.

// ℤ with n∘m = n+m (n even) / n-m (n odd); (ℤ,∘) ≅ D∞.
struct CDInfElem {
  BigInt value;
  bool operator==(const CDInfElem& o) const { return value == o.value; }
  bool operator<(const CDInfElem& o) const { return value < o.value; }
};

// Almost trivial brace on D∞; normal form a^shift or a^shift·b.
struct DInfElem {
  BigInt shift;
  int flip = 0;  // 0 or 1
  bool operator==(const DInfElem& o) const {
    return flip == o.flip && shift == o.shift;
  }
  bool operator<(const DInfElem& o) const {
    if (flip != o.flip) return flip < o.flip;
    return shift < o.shift;
  }
};

// Semidirect product brace on ℤ/3 × ℚ × ℤ:
// (a,x,k)∘(b,y,l) = (a+(-1)^k b, x+2^k y, k+l).
struct RositaElem {
  int a = 0;  // residue mod 3
  DyadicRat x;
  BigInt k;
  bool operator==(const RositaElem& o) const {
    return a == o.a && k == o.k && x == o.x;
  }
  bool operator<(const RositaElem& o) const {
    if (a != o.a) return a < o.a;
    if (k != o.k) return k < o.k;
    return x < o.x;
  }
};

// Free group of rank 2 with u∘v = u + λ^{ε(u)}(v), λ the a↔b swap.
// Letters: 1 = a, -1 = a⁻¹, 2 = b, -2 = b⁻¹; always freely reduced.
struct FreeWord {
  std::vector<std::int8_t> letters;
  bool operator==(const FreeWord& o) const { return letters == o.letters; }
  bool operator<(const FreeWord& o) const { return letters < o.letters; }
};

enum class Family { CDInf, OpTrivDInf, Rosita, Free2 };

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

using FamValue = std::variant<CDInfElem, DInfElem, RositaElem, FreeWord>;

Family family_of(const FamValue& v);

FamValue fam_add(const FamValue& g, const FamValue& h);
FamValue fam_neg(const FamValue& g);
FamValue fam_mul(const FamValue& g, const FamValue& h);
FamValue fam_bar(const FamValue& g);
FamValue fam_lambda(const FamValue& g, const FamValue& x);
FamValue fam_theta(const FamValue& a, const FamValue& b, const FamValue& x);
FamValue fam_zero(Family f);

// Breadth-first closure of {x} under the family's finite λ- (resp. θ-)
// generator set; nullopt when the orbit exceeds cap elements.
std::optional<std::vector<FamValue>> fam_lambda_orbit(const FamValue& x,
                                                      std::size_t cap);
std::optional<std::vector<FamValue>> fam_theta_orbit(const FamValue& x,
                                                     std::size_t cap);

enum class NamedSet {
  KerLambda,
  Fix,
  Soc,
  Ann,
  LambdaF,
  ThetaF,
  TorsionMul,
};

std::optional<NamedSet> named_set_from_string(const std::string& s);

// Closed-form membership predicate; throws UnsupportedQuery for pairs
// without a documented closed form (all seven are supported for all four
// families).
bool fam_membership(NamedSet set, const FamValue& x);

std::string format_element(const FamValue& v);
FamValue parse_element(Family f, const std::string& text);

// Seeded random element for agreement sampling.
FamValue random_element(Family f, std::mt19937_64& rng);

struct WindowReport {
  std::string claim;
  unsigned long long checked = 0;
  unsigned long long counterexamples = 0;
  std::string first_counterexample;
  bool ok() const { return counterexamples == 0; }
};

// Exhaustive verification of a named claim on all family elements within
// the window (|integer components| <= radius, rational numerator and
// denominator <= radius, word length <= radius). Claims:
//   cdinf-soc-2z, cdinf-torsion-odd, free2-orbit-le-2,
//   rosita-lambdaf, rosita-ann-trivial
WindowReport fam_window_check(const std::string& claim_id, long long radius,
                              std::size_t orbit_cap = 10000);

std::vector<std::string> known_claims();

}  // namespace skewlab
