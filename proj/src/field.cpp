// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dmat/field.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

#include "dmat/error.hpp"

namespace dmat {
namespace {

std::string strip_spaces(const std::string& text) {
  std::string out;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  }
  return out;
}

// Parses an optionally signed decimal integer spanning all of `s`.
bool parse_int(std::string_view s, std::int64_t& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

[[noreturn]] void bad_entry(const std::string& text, const std::string& what) {
  throw Error(ErrorCode::kParseError, "cannot read '" + text + "' as " + what);
}

}  // namespace

bool is_prime_u32(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

GFp::GFp(std::uint64_t p) {
  if (p > (std::uint64_t{1} << 31) || !is_prime_u32(p)) {
    throw Error(ErrorCode::kInvalidField,
                std::to_string(p) + " is not a prime below 2^31");
  }
  p_ = static_cast<std::uint32_t>(p);
}

GFp::Elem GFp::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

GFp::Elem GFp::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return pow(a, p_ - 2);
}

GFp::Elem GFp::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

GFp::Elem GFp::parse(const std::string& text) const {
  std::int64_t v;
  if (!parse_int(strip_spaces(text), v)) bad_entry(text, "an integer");
  return from_int(v);
}

GFp2::GFp2(std::uint64_t p, std::uint32_t c0, std::uint32_t c1)
    : base_(p), c0_(c0 % base_.p()), c1_(c1 % base_.p()) {
  // Irreducible iff the quadratic has no root in GF(p). For odd p that means
  // the discriminant is a non-residue.
  const std::uint32_t q = base_.p();
  bool has_root = false;
  if (q == 2) {
    has_root = c0_ == 0 || base_.add(base_.add(1, c1_), c0_) == 0;
  } else {
    const std::uint32_t disc =
        base_.sub(base_.mul(c1_, c1_), base_.mul(4 % q, c0_));
    has_root = disc == 0 || base_.pow(disc, (q - 1) / 2) == 1;
  }
  if (has_root) {
    throw Error(ErrorCode::kInvalidField,
                "a^2+" + std::to_string(c1_) + "a+" + std::to_string(c0_) +
                    " is reducible mod " + std::to_string(q));
  }
}

GFp2::Elem GFp2::mul(const Elem& x, const Elem& y) const {
  const auto& f = base_;
  const std::uint32_t lo = f.mul(x[0], y[0]);
  const std::uint32_t mid = f.add(f.mul(x[0], y[1]), f.mul(x[1], y[0]));
  const std::uint32_t hi = f.mul(x[1], y[1]);
  // a^2 = -c1 a - c0
  return {f.sub(lo, f.mul(hi, c0_)), f.sub(mid, f.mul(hi, c1_))};
}

GFp2::Elem GFp2::inv(const Elem& x) const {
  if (is_zero(x)) throw std::domain_error("inverse of zero");
  const auto& f = base_;
  // x times its conjugate x0 + x1 (-c1 - a) is the norm, an element of GF(p).
  const std::uint32_t norm =
      f.add(f.sub(f.mul(x[0], x[0]), f.mul(c1_, f.mul(x[0], x[1]))),
            f.mul(c0_, f.mul(x[1], x[1])));
  const std::uint32_t ni = f.inv(norm);
  const Elem conj = {f.sub(x[0], f.mul(c1_, x[1])), f.neg(x[1])};
  return {f.mul(conj[0], ni), f.mul(conj[1], ni)};
}

GFp2::Elem GFp2::parse(const std::string& text) const {
  const std::string s = strip_spaces(text);
  if (s.empty()) bad_entry(text, "an element of " + spec_of(*this).describe());
  Elem out = zero();
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = pos + 1;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    pos = end;
    bool negative = false;
    if (!term.empty() && (term[0] == '+' || term[0] == '-')) {
      negative = term[0] == '-';
      term.erase(0, 1);
    }
    if (term.empty()) bad_entry(text, "a linear polynomial in a");
    int slot = 0;
    if (term.back() == 'a') {
      slot = 1;
      term.pop_back();
      if (!term.empty() && term.back() == '*') term.pop_back();
      if (term.empty()) term = "1";
    }
    std::int64_t v;
    if (!parse_int(term, v)) bad_entry(text, "a linear polynomial in a");
    const std::uint32_t c = base_.from_int(negative ? -v : v);
    out[slot] = base_.add(out[slot], c);
  }
  return out;
}

std::string GFp2::format(const Elem& e) const {
  if (is_zero(e)) return "0";
  std::string out;
  if (e[1] != 0) out = (e[1] == 1 ? "" : std::to_string(e[1])) + "a";
  if (e[0] != 0) {
    if (!out.empty()) out += '+';
    out += std::to_string(e[0]);
  }
  return out;
}

Rationals::Elem Rationals::inv(const Elem& a) const {
  if (sgn(a) == 0) throw std::domain_error("inverse of zero");
  return 1 / a;
}

Rationals::Elem Rationals::parse(const std::string& text) const {
  const std::string s = strip_spaces(text);
  const std::size_t slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto valid = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
  };
  if (!valid(num) || !valid(den)) bad_entry(text, "a rational num/den");
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class d(den[0] == '+' ? den.substr(1) : den, 10);
  if (d == 0) bad_entry(text, "a rational with nonzero denominator");
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

std::string FieldSpec::describe() const {
  switch (kind) {
    case Kind::kPrime: return "GF(" + std::to_string(p) + ")";
    case Kind::kQuadratic:
      return "GF(" + std::to_string(p) + "^2)[a^2+" + std::to_string(c1) +
             "a+" + std::to_string(c0) + "]";
    case Kind::kRational: return "Q";
  }
  return "?";
}

FieldSpec spec_of(const GFp& f) { return FieldSpec::prime(f.p()); }
FieldSpec spec_of(const GFp2& f) {
  return FieldSpec::quadratic(f.p(), f.c0(), f.c1());
}
FieldSpec spec_of(const Rationals&) { return FieldSpec::rational(); }
FieldSpec spec_of(const FieldMatrix& m) {
  return std::visit([](const auto& x) { return spec_of(x.field); }, m);
}
int rows_of(const FieldMatrix& m) {
  return std::visit([](const auto& x) { return x.rows; }, m);
}
int cols_of(const FieldMatrix& m) {
  return std::visit([](const auto& x) { return x.cols; }, m);
}

FieldMatrix make_matrix(const FieldSpec& spec, int rows, int cols) {
  if (rows < 0 || cols < 0) {
    throw Error(ErrorCode::kParseError, "negative matrix dimension");
  }
  switch (spec.kind) {
    case FieldSpec::Kind::kPrime: return Matrix<GFp>(GFp(spec.p), rows, cols);
    case FieldSpec::Kind::kQuadratic:
      return Matrix<GFp2>(GFp2(spec.p, spec.c0, spec.c1), rows, cols);
    case FieldSpec::Kind::kRational:
      return Matrix<Rationals>(Rationals(), rows, cols);
  }
  throw Error(ErrorCode::kInvalidField, "unknown field kind");
}

void set_entry(FieldMatrix& m, int r, int c, const std::string& text) {
  std::visit([&](auto& x) { x.at(r, c) = x.field.parse(text); }, m);
}

std::string format_entry(const FieldMatrix& m, int r, int c) {
  return std::visit([&](const auto& x) { return x.field.format(x.at(r, c)); },
                    m);
}

}  // namespace dmat
