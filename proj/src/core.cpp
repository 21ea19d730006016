#include "cgolay/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace cgolay {

namespace {

// Position of each exponent in ASCII order of its symbol: '+' '-' 'i' 'j'.
constexpr std::array<int, 4> kSymbolRank{0, 2, 1, 3};

Quat symbol_to_quat(char c) {
  switch (c) {
    case '+': return Quat::one();
    case '-': return Quat::minus_one();
    case 'i': return Quat::i();
    case 'j': return Quat::minus_i();
    default:
      throw std::invalid_argument(std::string("invalid sequence character '") + c + "'");
  }
}

}  // namespace

std::complex<double> Quat::value() const {
  constexpr std::array<std::complex<double>, 4> kValues{
      std::complex<double>{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kValues[exp_];
}

char Quat::symbol() const {
  constexpr std::array<char, 4> kSymbols{'+', 'i', '-', 'j'};
  return kSymbols[exp_];
}

Quat Quat::from_symbol(char c) { return symbol_to_quat(c); }

QuatSequence::QuatSequence(std::vector<Quat> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("sequence must have length >= 1");
}

QuatSequence QuatSequence::parse(std::string_view text) {
  std::vector<Quat> entries;
  entries.reserve(text.size());
  for (char c : text) entries.push_back(symbol_to_quat(c));
  return QuatSequence(std::move(entries));
}

QuatSequence QuatSequence::from_exponents(const std::vector<int>& exponents) {
  std::vector<Quat> entries;
  entries.reserve(exponents.size());
  for (int e : exponents) {
    if (e < 0 || e > 3) throw std::invalid_argument("exponent out of range");
    entries.emplace_back(e);
  }
  return QuatSequence(std::move(entries));
}

std::string QuatSequence::to_string() const {
  std::string out;
  out.reserve(entries_.size());
  for (Quat q : entries_) out.push_back(q.symbol());
  return out;
}

std::strong_ordering QuatSequence::operator<=>(const QuatSequence& o) const {
  return std::lexicographical_compare_three_way(
      entries_.begin(), entries_.end(), o.entries_.begin(), o.entries_.end(),
      [](Quat x, Quat y) { return kSymbolRank[x.exponent()] <=> kSymbolRank[y.exponent()]; });
}

MaskedSequence::MaskedSequence(std::size_t n, Parity parity) : slots_(n, -1), parity_(parity) {
  if (n == 0) throw std::invalid_argument("sequence must have length >= 1");
  for (std::size_t k = 0; k < n; ++k) {
    if (is_active(k)) slots_[k] = 0;
  }
}

std::optional<Quat> MaskedSequence::at(std::size_t k) const {
  if (slots_.at(k) < 0) return std::nullopt;
  return Quat(slots_[k]);
}

void MaskedSequence::set(std::size_t k, Quat q) {
  if (k >= slots_.size() || !is_active(k)) {
    throw std::invalid_argument("slot " + std::to_string(k) + " is a forced zero");
  }
  slots_[k] = static_cast<std::int8_t>(q.exponent());
}

std::size_t MaskedSequence::nonzero_count() const {
  return static_cast<std::size_t>(std::count_if(slots_.begin(), slots_.end(), [](auto s) { return s >= 0; }));
}

std::string MaskedSequence::to_string() const {
  std::string out;
  out.reserve(slots_.size());
  for (auto s : slots_) out.push_back(s < 0 ? '0' : Quat(s).symbol());
  return out;
}

MaskedSequence MaskedSequence::parse(std::string_view text, Parity parity) {
  MaskedSequence m(text.size(), parity);
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] == '0') {
      if (m.is_active(k)) throw std::invalid_argument("masked sequence has zero in an active slot");
      continue;
    }
    m.set(k, symbol_to_quat(text[k]));
  }
  return m;
}

std::string GolayPair::to_line() const {
  return std::to_string(a.size()) + '\t' + a.to_string() + '\t' + b.to_string();
}

GolayPair GolayPair::parse_line(std::string_view line) {
  const auto t1 = line.find('\t');
  const auto t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
  if (t2 == std::string_view::npos) {
    throw std::invalid_argument("malformed pair line: '" + std::string(line) + "'");
  }
  const std::string n_text(line.substr(0, t1));
  GolayPair p{QuatSequence::parse(line.substr(t1 + 1, t2 - t1 - 1)),
              QuatSequence::parse(line.substr(t2 + 1))};
  if (p.a.size() != p.b.size() || std::to_string(p.a.size()) != n_text) {
    throw std::invalid_argument("pair line length mismatch: '" + std::string(line) + "'");
  }
  return p;
}

std::strong_ordering GolayPair::operator<=>(const GolayPair& o) const {
  if (auto c = a.size() <=> o.a.size(); c != 0) {
    // Lines start with the decimal length, so mirror string order on it.
    const auto x = std::to_string(a.size());
    const auto y = std::to_string(o.a.size());
    return x.compare(y) < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (auto c = a <=> o.a; c != 0) return c;
  return b <=> o.b;
}

namespace {

template <typename Get>
GaussianInt autocorr_impl(std::size_t n, std::size_t shift, Get get) {
  if (shift >= n) {
    throw std::invalid_argument("autocorrelation shift " + std::to_string(shift) +
                                " out of range for length " + std::to_string(n));
  }
  GaussianInt sum;
  for (std::size_t k = 0; k + shift < n; ++k) {
    const auto x = get(k);
    const auto y = get(k + shift);
    if (x && y) sum += GaussianInt::of(*x * y->conj());
  }
  return sum;
}

}  // namespace

GaussianInt autocorr(const QuatSequence& seq, std::size_t shift) {
  return autocorr_impl(seq.size(), shift, [&](std::size_t k) { return std::optional<Quat>(seq[k]); });
}

GaussianInt autocorr(const MaskedSequence& seq, std::size_t shift) {
  return autocorr_impl(seq.size(), shift, [&](std::size_t k) { return seq.at(k); });
}

bool is_golay_pair(const QuatSequence& a, const QuatSequence& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("Golay pair members must have equal length");
  }
  for (std::size_t s = 1; s < a.size(); ++s) {
    if (!(autocorr(a, s) + autocorr(b, s)).is_zero()) return false;
  }
  return true;
}

std::complex<double> hall_eval(const QuatSequence& seq, std::complex<double> z) {
  // Horner from the top coefficient.
  std::complex<double> acc{0, 0};
  for (auto it = seq.entries().rbegin(); it != seq.entries().rend(); ++it) acc = acc * z + it->value();
  return acc;
}

std::complex<double> hall_eval(const MaskedSequence& seq, std::complex<double> z) {
  std::complex<double> acc{0, 0};
  for (std::size_t k = seq.size(); k-- > 0;) {
    acc *= z;
    if (auto q = seq.at(k)) acc += q->value();
  }
  return acc;
}

GaussianInt entry_sum(const QuatSequence& seq) {
  GaussianInt sum;
  for (Quat q : seq) sum += GaussianInt::of(q);
  return sum;
}

GaussianInt entry_sum(const MaskedSequence& seq) {
  GaussianInt sum;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (auto q = seq.at(k)) sum += GaussianInt::of(*q);
  }
  return sum;
}

QuatSequence positional_scale(Quat c, const QuatSequence& seq) {
  std::vector<Quat> out(seq.begin(), seq.end());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = out[k] * Quat(c.exponent() * static_cast<int>(k % 4));
  }
  return QuatSequence(std::move(out));
}

namespace {

QuatSequence reversed(const QuatSequence& s) {
  return QuatSequence(std::vector<Quat>(s.entries().rbegin(), s.entries().rend()));
}

QuatSequence conj_reversed(const QuatSequence& s) {
  std::vector<Quat> out;
  out.reserve(s.size());
  for (auto it = s.entries().rbegin(); it != s.entries().rend(); ++it) out.push_back(it->conj());
  return QuatSequence(std::move(out));
}

QuatSequence scaled(const QuatSequence& s, Quat c) {
  std::vector<Quat> out;
  out.reserve(s.size());
  for (Quat q : s) out.push_back(q * c);
  return QuatSequence(std::move(out));
}

}  // namespace

GolayPair apply_equivalence(Equivalence op, const GolayPair& p) {
  switch (op) {
    case Equivalence::E1: return {reversed(p.a), reversed(p.b)};
    case Equivalence::E2: return {conj_reversed(p.a), p.b};
    case Equivalence::E3: return {p.b, p.a};
    case Equivalence::E4: return {scaled(p.a, Quat::i()), p.b};
    case Equivalence::E5: return {positional_scale(Quat::i(), p.a), positional_scale(Quat::i(), p.b)};
  }
  throw std::invalid_argument("unknown equivalence operation " + std::to_string(static_cast<int>(op)));
}

GolayPair normalize(const GolayPair& p) {
  GolayPair q = p;
  const std::size_t n = q.size();
  if (n == 0) return q;
  while (q.a[0] != Quat::one()) q = apply_equivalence(Equivalence::E4, q);
  if (n >= 2) {
    while (q.a[1] != Quat::one()) q = apply_equivalence(Equivalence::E5, q);
  }
  if (n >= 3 && q.a[2] == Quat::minus_i()) {
    q = apply_equivalence(Equivalence::E2, apply_equivalence(Equivalence::E1, q));
  }
  if (q.b[0] != Quat::one()) {
    q = apply_equivalence(Equivalence::E3, q);
    while (q.a[0] != Quat::one()) q = apply_equivalence(Equivalence::E4, q);
    q = apply_equivalence(Equivalence::E3, q);
  }
  return q;
}

bool is_normalized(const GolayPair& p) {
  const std::size_t n = p.size();
  if (n == 0) return false;
  if (p.a[0] != Quat::one() || p.b[0] != Quat::one()) return false;
  if (n >= 2 && p.a[1] != Quat::one()) return false;
  if (n >= 3 && p.a[2] == Quat::minus_i()) return false;
  return true;
}

std::pair<MaskedSequence, MaskedSequence> split_even_odd(const QuatSequence& seq) {
  MaskedSequence even(seq.size(), Parity::even);
  MaskedSequence odd(seq.size(), Parity::odd);
  for (std::size_t k = 0; k < seq.size(); ++k) (k % 2 == 0 ? even : odd).set(k, seq[k]);
  return {even, odd};
}

}  // namespace cgolay
