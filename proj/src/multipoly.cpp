#include "hexacycle/multipoly.hpp"

#include <algorithm>
#include <numeric>

namespace hexacycle {

bool MultiPoly::GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = std::accumulate(a.begin(), a.end(), 0U);
  const unsigned db = std::accumulate(b.begin(), b.end(), 0U);
  if (da != db) return da < db;
  return a < b;
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Rational& value) {
  MultiPoly p(std::move(variables));
  p.add_term(Exponents(p.vars_.size(), 0), value);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, const std::string& name) {
  MultiPoly p(std::move(variables));
  Exponents e(p.vars_.size(), 0);
  e[p.index_of(name)] = 1;
  p.add_term(e, Rational(1));
  return p;
}

std::vector<MultiPoly> MultiPoly::variables(const std::vector<std::string>& names) {
  std::vector<MultiPoly> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(variable(names, n));
  return out;
}

std::size_t MultiPoly::index_of(const std::string& name) const {
  const auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw Error(ErrorCode::MissingVariable, "unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - vars_.begin());
}

unsigned MultiPoly::total_degree() const {
  if (terms_.empty()) return 0;
  const auto& e = terms_.rbegin()->first;
  return std::accumulate(e.begin(), e.end(), 0U);
}

void MultiPoly::add_term(const Exponents& exps, const Rational& coeff) {
  if (exps.size() != vars_.size()) {
    throw Error(ErrorCode::InvalidArgument, "exponent vector length does not match variables");
  }
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::require_same_ring(const MultiPoly& other) const {
  if (vars_ != other.vars_) {
    throw Error(ErrorCode::InvalidArgument, "polynomials over different variable lists");
  }
}

Rational MultiPoly::eval(std::span<const Rational> values) const {
  if (values.size() != vars_.size()) {
    throw Error(ErrorCode::MissingVariable, "evaluation point has wrong number of values");
  }
  // Power tables per variable up to the maximal exponent used.
  std::vector<std::vector<Rational>> powers(vars_.size());
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      auto& tbl = powers[i];
      if (tbl.empty()) tbl.push_back(Rational(1));
      while (tbl.size() <= e[i]) tbl.push_back(tbl.back() * values[i]);
    }
  }
  Rational sum;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) t *= powers[i][e[i]];
    }
    sum += t;
  }
  return sum;
}

Rational MultiPoly::eval(const std::map<std::string, Rational>& assignment) const {
  std::vector<Rational> values;
  values.reserve(vars_.size());
  for (const auto& v : vars_) {
    const auto it = assignment.find(v);
    if (it == assignment.end()) {
      throw Error(ErrorCode::MissingVariable, "no value for variable '" + v + "'");
    }
    values.push_back(it->second);
  }
  return eval(std::span<const Rational>(values));
}

MultiPoly MultiPoly::compose(const std::map<std::string, MultiPoly>& subst) const {
  std::vector<const MultiPoly*> images;
  images.reserve(vars_.size());
  for (const auto& v : vars_) {
    const auto it = subst.find(v);
    if (it == subst.end()) {
      throw Error(ErrorCode::MissingVariable, "no substitution for variable '" + v + "'");
    }
    images.push_back(&it->second);
  }
  if (images.empty()) {
    throw Error(ErrorCode::InvalidArgument, "cannot compose a polynomial without variables");
  }
  const auto& target = images.front()->vars();
  for (const auto* img : images) images.front()->require_same_ring(*img);

  std::vector<std::vector<MultiPoly>> powers(vars_.size());
  MultiPoly out(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      auto& tbl = powers[i];
      if (tbl.empty()) tbl.push_back(constant(target, Rational(1)));
      while (tbl.size() <= e[i]) tbl.push_back(tbl.back() * *images[i]);
      t *= tbl[e[i]];
    }
    out += t;
  }
  return out;
}

MultiPoly MultiPoly::derivative(const std::string& name) const {
  const std::size_t idx = index_of(name);
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    Exponents d = e;
    d[idx] -= 1;
    out.add_term(d, c * Rational(static_cast<long>(e[idx])));
  }
  return out;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_[i];
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out += '-';
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == Rational(1)) {
      out += mono;
    } else {
      out += mag.str() + '*' + mono;
    }
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  require_same_ring(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  require_same_ring(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  require_same_ring(rhs);
  MultiPoly out(vars_);
  Exponents e(vars_.size());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= rhs;
  return *this;
}

MultiPoly pow(const MultiPoly& base, unsigned exponent) {
  MultiPoly result = MultiPoly::constant(base.vars(), Rational(1));
  MultiPoly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent) b *= b;
  }
  return result;
}

}  // namespace hexacycle
