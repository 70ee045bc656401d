#include "tempered/weight.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "tempered/error.hpp"

namespace tempered {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ZeroRoot: return "ZeroRoot";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::UnknownDescriptor: return "UnknownDescriptor";
    case Errc::NotStrictlyDominant: return "NotStrictlyDominant";
    case Errc::NondegeneracyViolation: return "NondegeneracyViolation";
    case Errc::NotDominant: return "NotDominant";
    case Errc::NotGenuine: return "NotGenuine";
    case Errc::NonIntegralPairing: return "NonIntegralPairing";
    case Errc::AmbiguousPositiveSystem: return "AmbiguousPositiveSystem";
    case Errc::RangeError: return "RangeError";
    case Errc::DominanceFailure: return "DominanceFailure";
    case Errc::InternalBijectionFailure: return "InternalBijectionFailure";
    case Errc::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

bool is_internal(Errc code) {
  return code == Errc::NondegeneracyViolation || code == Errc::DominanceFailure ||
         code == Errc::InternalBijectionFailure || code == Errc::InternalInvariant;
}

Rational frac(long p, long q) {
  if (q == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_signed_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

Integer to_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_signed_integer(s)) throw Error(Errc::ParseError, "not a rational: '" + std::string(text) + "'");
    return Rational(to_integer(s));
  }
  const auto num = trim(s.substr(0, slash));
  const auto den = trim(s.substr(slash + 1));
  if (!is_signed_integer(num) || den.empty() ||
      !std::all_of(den.begin(), den.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; })) {
    throw Error(Errc::ParseError, "not a rational: '" + std::string(text) + "'");
  }
  const Integer d = to_integer(den);
  if (d == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational r(to_integer(num), d);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

Weight& Weight::operator+=(const Weight& other) {
  if (other.rank() != rank()) throw Error(Errc::DimensionMismatch, "weight addition");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (other.rank() != rank()) throw Error(Errc::DimensionMismatch, "weight subtraction");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Weight& Weight::operator*=(const Rational& c) {
  for (auto& x : coords_) x *= c;
  return *this;
}

std::string format_weight(const Weight& w) {
  if (w.rank() == 1) return format_rational(w[0]);
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (i) os << ',';
    os << format_rational(w[i]);
  }
  os << ')';
  return os.str();
}

Weight parse_weight(std::string_view text) {
  auto s = trim(text);
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw Error(Errc::ParseError, "unbalanced parenthesis in '" + std::string(text) + "'");
    s = trim(s.substr(1, s.size() - 2));
  }
  if (s.empty()) throw Error(Errc::ParseError, "empty weight");
  std::vector<Rational> coords;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    coords.push_back(parse_rational(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Weight(std::move(coords));
}

bool lex_positive(const Weight& w) {
  for (const auto& x : w.coords()) {
    if (x != 0) return x > 0;
  }
  return false;
}

BilinearForm::BilinearForm(std::vector<std::vector<Rational>> gram) : gram_(std::move(gram)) {
  for (const auto& row : gram_) {
    if (row.size() != gram_.size()) throw Error(Errc::DimensionMismatch, "Gram matrix is not square");
  }
}

BilinearForm BilinearForm::identity(std::size_t rank) {
  std::vector<std::vector<Rational>> g(rank, std::vector<Rational>(rank));
  for (std::size_t i = 0; i < rank; ++i) g[i][i] = 1;
  return BilinearForm(std::move(g));
}

bool BilinearForm::symmetric() const {
  for (std::size_t i = 0; i < gram_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i]) return false;
  return true;
}

bool BilinearForm::positive_definite() const {
  // Leading principal minors by fraction-free elimination; the k-th pivot
  // is the ratio of consecutive minors, so all pivots > 0 iff all minors > 0.
  auto a = gram_;
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return symmetric();
}

BilinearForm BilinearForm::scaled(const Rational& c) const {
  auto g = gram_;
  for (auto& row : g)
    for (auto& x : row) x *= c;
  return BilinearForm(std::move(g));
}

bool SignedRootList::contains(const Weight& w) const {
  return std::find(roots.begin(), roots.end(), w) != roots.end();
}

bool SignedRootList::closed_under_negation() const {
  return std::all_of(roots.begin(), roots.end(), [&](const Weight& r) { return contains(-r); });
}

bool SignedRootList::has_duplicates() const {
  auto sorted = roots;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

std::vector<Weight> SignedRootList::pair_representatives() const {
  std::vector<Weight> out;
  for (const auto& r : roots)
    if (lex_positive(r)) out.push_back(r);
  return out;
}

Rational inner(const Weight& a, const Weight& b, const BilinearForm& form) {
  const std::size_t n = form.rank();
  if (a.rank() != n || b.rank() != n) throw Error(Errc::DimensionMismatch, "inner product");
  const auto& g = form.gram();
  Rational sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < n; ++j) row += g[i][j] * b[j];
    sum += a[i] * row;
  }
  return sum;
}

Rational norm2(const Weight& w, const BilinearForm& form) { return inner(w, w, form); }

Rational coroot_pairing(const Weight& w, const Weight& root, const BilinearForm& form) {
  const Rational rr = inner(root, root, form);
  if (rr == 0) throw Error(Errc::ZeroRoot, "coroot pairing against a zero root");
  return Rational(2 * inner(w, root, form) / rr);
}

Weight half_sum(std::span<const Weight> roots, std::size_t rank) {
  Weight sum(rank);
  for (const auto& r : roots) sum += r;
  sum *= frac(1, 2);
  return sum;
}

bool is_dominant(const Weight& w, std::span<const Weight> positives, const BilinearForm& form,
                 bool strict) {
  return std::all_of(positives.begin(), positives.end(), [&](const Weight& a) {
    const Rational p = inner(w, a, form);
    return strict ? p > 0 : p >= 0;
  });
}

Weight reflect(const Weight& w, const Weight& root, const BilinearForm& form) {
  return w - coroot_pairing(w, root, form) * root;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer ceil_sqrt(const Rational& q) {
  if (q < 0) throw Error(Errc::InvalidArgument, "square root of a negative number");
  // ceil(q) first; then the integer square root rounded up.
  Integer c = q.get_num() / q.get_den();
  if (c * q.get_den() < q.get_num()) c += 1;
  Integer r = sqrt(c);
  if (r * r < c) r += 1;
  return r;
}

}  // namespace tempered
