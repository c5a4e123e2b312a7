#include "forge/scalar.hpp"

#include <algorithm>

namespace forge {

Scalar Scalar::parameter(const std::string& name, const Rat& coeff) {
  Scalar s;
  if (name.empty()) raise(Errc::bad_input, "empty parameter name");
  if (sgn(coeff) != 0) s.qs_.emplace_back(name, coeff);
  return s;
}

bool Scalar::is_zero() const { return sgn(c0_) == 0 && qs_.empty(); }

const Rat& Scalar::rational() const {
  if (!qs_.empty()) raise(Errc::parameter_product, "scalar is not parameter-free");
  return c0_;
}

void Scalar::prune() {
  qs_.erase(std::remove_if(qs_.begin(), qs_.end(),
                           [](const auto& p) { return sgn(p.second) == 0; }),
            qs_.end());
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.c0_ = -r.c0_;
  for (auto& p : r.qs_) p.second = -p.second;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  c0_ += o.c0_;
  for (const auto& [name, c] : o.qs_) {
    auto it = std::lower_bound(qs_.begin(), qs_.end(), name,
                               [](const auto& p, const std::string& n) { return p.first < n; });
    if (it != qs_.end() && it->first == name)
      it->second += c;
    else
      qs_.insert(it, {name, c});
  }
  prune();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar Scalar::scaled(const Rat& c) const {
  if (sgn(c) == 0) return Scalar();
  Scalar r(*this);
  r.c0_ *= c;
  for (auto& p : r.qs_) p.second *= c;
  return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_rational()) return b.scaled(a.c0_);
  if (b.is_rational()) return a.scaled(b.c0_);
  raise(Errc::parameter_product,
        "product of two parameter-carrying scalars is outside the linear-form domain");
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.c0_ == b.c0_ && a.qs_ == b.qs_;
}

bool scalar_prints_negative(const Scalar& s) {
  if (s.is_rational()) return sgn(s.constant_part()) < 0;
  if (sgn(s.constant_part()) == 0 && s.parameter_parts().size() == 1)
    return sgn(s.parameter_parts()[0].second) < 0;
  return false;
}

std::string to_string(const Scalar& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  const Rat& c0 = s.constant_part();
  if (sgn(c0) != 0) {
    out += c0.get_str();
    first = false;
  }
  for (const auto& [name, c] : s.parameter_parts()) {
    Rat mag = abs(c);
    std::string body = (mag == 1) ? name : mag.get_str() + "*" + name;
    if (first) {
      out += (sgn(c) < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (sgn(c) < 0 ? "-" : "+") + body;
    }
  }
  return out;
}

}  // namespace forge
