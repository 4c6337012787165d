#include "moebius/npoly.hpp"

#include "moebius/errors.hpp"

namespace moebius {

NPolynomial NPolynomial::monomial(int exponent, const BigRational& coeff) {
  NPolynomial p;
  p.add_term(exponent, coeff);
  return p;
}

BigRational NPolynomial::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigRational(0) : it->second;
}

int NPolynomial::min_exponent() const {
  return terms_.empty() ? 0 : terms_.begin()->first;
}

int NPolynomial::max_exponent() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

void NPolynomial::add_term(int exponent, const BigRational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

NPolynomial& NPolynomial::operator+=(const NPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

NPolynomial& NPolynomial::operator-=(const NPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

NPolynomial& NPolynomial::operator*=(const NPolynomial& o) {
  NPolynomial r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return *this = std::move(r);
}

NPolynomial& NPolynomial::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

NPolynomial NPolynomial::operator-() const {
  NPolynomial r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

BigRational NPolynomial::evaluate(const BigRational& n) const {
  BigRational sum = 0;
  for (const auto& [e, c] : terms_) sum += c * pow(n, e);
  return sum;
}

NPolynomial NPolynomial::scale_argument(const BigRational& c) const {
  NPolynomial r;
  for (const auto& [e, v] : terms_) r.add_term(e, v * pow(c, e));
  return r;
}

NPolynomial NPolynomial::shift(int k) const {
  NPolynomial r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e + k, v);
  return r;
}

std::string to_string(const NPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    BigRational a = abs(c);
    if (e == 0) {
      out += a.get_str();
      continue;
    }
    if (a != 1) out += a.get_str() + "*";
    out += "N";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

AlphaNPolynomial AlphaNPolynomial::monomial(int s_exponent, int n_exponent,
                                            const BigRational& coeff) {
  AlphaNPolynomial p;
  p.add_term(s_exponent, n_exponent, coeff);
  return p;
}

BigRational AlphaNPolynomial::coeff(int s_exponent, int n_exponent) const {
  auto it = terms_.find({s_exponent, n_exponent});
  return it == terms_.end() ? BigRational(0) : it->second;
}

void AlphaNPolynomial::add_term(int s_exponent, int n_exponent,
                                const BigRational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace({s_exponent, n_exponent}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

AlphaNPolynomial& AlphaNPolynomial::operator+=(const AlphaNPolynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

AlphaNPolynomial& AlphaNPolynomial::operator-=(const AlphaNPolynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

AlphaNPolynomial& AlphaNPolynomial::operator*=(const AlphaNPolynomial& o) {
  AlphaNPolynomial r;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_)
      r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
  return *this = std::move(r);
}

AlphaNPolynomial& AlphaNPolynomial::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

AlphaNPolynomial AlphaNPolynomial::operator-() const {
  AlphaNPolynomial r = *this;
  for (auto& [k, v] : r.terms_) v = -v;
  return r;
}

NPolynomial AlphaNPolynomial::at_alpha(const BigRational& alpha) const {
  NPolynomial r;
  for (const auto& [k, c] : terms_) {
    if (k.first % 2 != 0)
      throw ConsistencyError("odd power of alpha^(1/2) cannot be evaluated at a rational alpha");
    r.add_term(k.second, c * pow(alpha, k.first / 2));
  }
  return r;
}

AlphaNPolynomial AlphaNPolynomial::dual() const {
  // s^a N^b -> s^(-a) (-s^2 N)^b
  AlphaNPolynomial r;
  for (const auto& [k, c] : terms_) {
    auto [a, b] = k;
    r.add_term(2 * b - a, b, (b % 2 == 0) ? c : BigRational(-c));
  }
  return r;
}

std::string to_string(const AlphaNPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + c.get_str() + ")";
    if (k.first != 0) out += "*a^(" + std::to_string(k.first) + "/2)";
    if (k.second != 0) out += "*N^" + std::to_string(k.second);
  }
  return out;
}

}  // namespace moebius
