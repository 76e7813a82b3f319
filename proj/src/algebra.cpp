#include "relhyp/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <numeric>
#include <sstream>

namespace relhyp {

namespace {

const FactorSpec& factor_of(const GroupSpec& spec, int i) {
  if (i < 0 || i >= static_cast<int>(spec.factors.size()))
    throw std::invalid_argument("syllable factor index out of range");
  return spec.factors[i];
}

void check_payload(const GroupSpec& spec, const Syllable& s) {
  const auto& f = factor_of(spec, s.factor);
  switch (f.kind) {
    case FactorKind::FreeAbelian: {
      const auto* v = std::get_if<AbelianVec>(&s.payload);
      if (!v || static_cast<long>(v->size()) != f.param)
        throw std::invalid_argument("abelian payload has wrong rank");
      break;
    }
    case FactorKind::FiniteCyclic: {
      if (!std::holds_alternative<Residue>(s.payload))
        throw std::invalid_argument("cyclic payload must be a residue");
      break;
    }
    case FactorKind::Free: {
      const auto* w = std::get_if<FreeWord>(&s.payload);
      if (!w) throw std::invalid_argument("free payload must be a word");
      for (auto letter : *w)
        if (letter == 0 || std::abs(letter) > f.param)
          throw std::invalid_argument("free letter out of range");
      break;
    }
  }
}

bool payload_is_identity(const FactorSpec& f, const Syllable& s) {
  switch (f.kind) {
    case FactorKind::FreeAbelian: {
      const auto& v = std::get<AbelianVec>(s.payload);
      return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
    }
    case FactorKind::FiniteCyclic:
      return std::get<Residue>(s.payload) % f.param == 0;
    case FactorKind::Free:
      return std::get<FreeWord>(s.payload).empty();
  }
  return true;
}

// Canonical residue in 0..m-1.
Residue canonical_residue(const FactorSpec& f, Residue r) {
  r %= f.param;
  if (r < 0) r += f.param;
  return r;
}

void free_reduce(FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (auto letter : w) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  w = std::move(out);
}

// Multiply b into a (both payloads of the same factor).
void payload_mul_into(const FactorSpec& f, Syllable& a, const Syllable& b) {
  switch (f.kind) {
    case FactorKind::FreeAbelian: {
      auto& va = std::get<AbelianVec>(a.payload);
      const auto& vb = std::get<AbelianVec>(b.payload);
      for (size_t i = 0; i < va.size(); ++i) va[i] += vb[i];
      break;
    }
    case FactorKind::FiniteCyclic: {
      auto& ra = std::get<Residue>(a.payload);
      ra = canonical_residue(f, ra + std::get<Residue>(b.payload));
      break;
    }
    case FactorKind::Free: {
      auto& wa = std::get<FreeWord>(a.payload);
      const auto& wb = std::get<FreeWord>(b.payload);
      size_t cancel = 0;
      while (cancel < wa.size() && cancel < wb.size() &&
             wa[wa.size() - 1 - cancel] == -wb[cancel])
        ++cancel;
      wa.resize(wa.size() - cancel);
      wa.insert(wa.end(), wb.begin() + cancel, wb.end());
      break;
    }
  }
}

std::int64_t payload_length(const FactorSpec& f, const Syllable& s) {
  switch (f.kind) {
    case FactorKind::FreeAbelian: {
      const auto& v = std::get<AbelianVec>(s.payload);
      std::int64_t sum = 0;
      for (auto x : v) sum += std::abs(x);
      return sum;
    }
    case FactorKind::FiniteCyclic: {
      Residue r = canonical_residue(f, std::get<Residue>(s.payload));
      return std::min<std::int64_t>(r, f.param - r);
    }
    case FactorKind::Free:
      return static_cast<std::int64_t>(std::get<FreeWord>(s.payload).size());
  }
  return 0;
}

Syllable payload_inverse(const FactorSpec& f, const Syllable& s) {
  Syllable out = s;
  switch (f.kind) {
    case FactorKind::FreeAbelian: {
      for (auto& x : std::get<AbelianVec>(out.payload)) x = -x;
      break;
    }
    case FactorKind::FiniteCyclic: {
      auto& r = std::get<Residue>(out.payload);
      r = canonical_residue(f, -r);
      break;
    }
    case FactorKind::Free: {
      auto& w = std::get<FreeWord>(out.payload);
      std::reverse(w.begin(), w.end());
      for (auto& letter : w) letter = -letter;
      break;
    }
  }
  return out;
}

// Append syllable s to the normal form under construction, merging with the
// stack top and cascading when merges vanish.
void push_normalized(const GroupSpec& spec, std::vector<Syllable>& out, Syllable s) {
  const auto* f = &factor_of(spec, s.factor);
  if (payload_is_identity(*f, s)) return;
  while (!out.empty() && out.back().factor == s.factor) {
    payload_mul_into(*f, out.back(), s);
    if (!payload_is_identity(*f, out.back())) return;
    out.pop_back();
    if (out.empty()) return;
    // the new top may now merge with whatever comes next; nothing pending
    return;
  }
  out.push_back(std::move(s));
}

std::int64_t letter_name_index(const FactorSpec& f, std::string_view name) {
  if (f.param == 1 && name == "t") return 1;
  if (name.size() >= 2 && name[0] == 'x') {
    int idx = 0;
    auto res = std::from_chars(name.data() + 1, name.data() + name.size(), idx);
    if (res.ec == std::errc() && res.ptr == name.data() + name.size() && idx >= 1 &&
        idx <= f.param)
      return idx;
  }
  return 0;
}

}  // namespace

Syllable abelian_syllable(int factor, AbelianVec v) {
  return Syllable{factor, std::move(v)};
}
Syllable cyclic_syllable(int factor, Residue r) { return Syllable{factor, r}; }
Syllable free_syllable(int factor, FreeWord w) { return Syllable{factor, std::move(w)}; }

Element normalize(const GroupSpec& spec, std::vector<Syllable> raw) {
  Element out;
  out.syllables.reserve(raw.size());
  for (auto& s : raw) {
    check_payload(spec, s);
    const auto& f = spec.factors[s.factor];
    if (f.kind == FactorKind::FiniteCyclic)
      s.payload = canonical_residue(f, std::get<Residue>(s.payload));
    else if (f.kind == FactorKind::Free)
      free_reduce(std::get<FreeWord>(s.payload));
    push_normalized(spec, out.syllables, std::move(s));
  }
  return out;
}

Element multiply(const GroupSpec& spec, const Element& a, const Element& b) {
  Element out = a;
  for (const auto& s : b.syllables) push_normalized(spec, out.syllables, s);
  return out;
}

Element inverse(const GroupSpec& spec, const Element& a) {
  Element out;
  out.syllables.reserve(a.syllables.size());
  for (auto it = a.syllables.rbegin(); it != a.syllables.rend(); ++it)
    out.syllables.push_back(payload_inverse(factor_of(spec, it->factor), *it));
  return out;
}

Element power(const GroupSpec& spec, const Element& a, std::int64_t k) {
  Element base = k < 0 ? inverse(spec, a) : a;
  Element out;
  for (std::int64_t i = 0, n = std::abs(k); i < n; ++i) out = multiply(spec, out, base);
  return out;
}

std::int64_t word_length(const GroupSpec& spec, const Element& g) {
  std::int64_t sum = 0;
  for (const auto& s : g.syllables) sum += payload_length(factor_of(spec, s.factor), s);
  return sum;
}

std::int64_t relative_length(const GroupSpec& spec, const Element& g) {
  std::int64_t sum = 0;
  for (const auto& s : g.syllables) {
    const auto& f = factor_of(spec, s.factor);
    sum += f.peripheral ? 1 : payload_length(f, s);
  }
  return sum;
}

bool commutes(const GroupSpec& spec, const Element& a, const Element& b) {
  return multiply(spec, a, b) == multiply(spec, b, a);
}

bool is_cyclically_reduced(const GroupSpec& spec, const Element& g) {
  if (g.syllables.empty()) return true;
  if (g.size() == 1) {
    const auto& s = g.syllables.front();
    if (factor_of(spec, s.factor).kind == FactorKind::Free) {
      const auto& w = std::get<FreeWord>(s.payload);
      return w.size() < 2 || w.front() != -w.back();
    }
    return true;
  }
  return g.syllables.front().factor != g.syllables.back().factor;
}

namespace {

// Greedy pass: strip matching outer syllables, fold one wrap-around merge,
// shift letters out of a lone free-factor syllable. The conjugator is valid
// but not necessarily minimal.
struct GreedyReduction {
  Element core;
  Element conjugator;
};

GreedyReduction greedy_reduce(const GroupSpec& spec, const Element& g) {
  std::vector<Syllable> core(g.syllables.begin(), g.syllables.end());
  std::vector<Syllable> conj;
  size_t lo = 0, hi = core.size();
  while (hi - lo >= 2 && core[lo].factor == core[hi - 1].factor) {
    const auto& f = factor_of(spec, core[lo].factor);
    Syllable merged = core[hi - 1];
    payload_mul_into(f, merged, core[lo]);
    if (!payload_is_identity(f, merged)) break;
    conj.push_back(core[lo]);
    ++lo;
    --hi;
  }
  std::vector<Syllable> rest(core.begin() + lo, core.begin() + hi);
  if (rest.size() >= 2 && rest.front().factor == rest.back().factor) {
    // rotate the back syllable to the front: g' = back^-1 g back
    const auto& f = factor_of(spec, rest.front().factor);
    Syllable back = rest.back();
    rest.pop_back();
    Syllable merged = back;
    payload_mul_into(f, merged, rest.front());
    rest.front() = std::move(merged);
    conj.push_back(payload_inverse(f, back));
  }
  if (rest.size() == 1 &&
      factor_of(spec, rest.front().factor).kind == FactorKind::Free) {
    auto& w = std::get<FreeWord>(rest.front().payload);
    while (w.size() >= 2 && w.front() == -w.back()) {
      conj.push_back(free_syllable(rest.front().factor, {w.front()}));
      w.erase(w.begin());
      w.pop_back();
    }
  }
  GreedyReduction out;
  out.core.syllables = std::move(rest);
  out.conjugator = normalize(spec, std::move(conj));
  return out;
}

// Smallest p dividing n with seq[i] == seq[i - p] for all i >= p.
template <typename Seq>
size_t smallest_period(const Seq& seq) {
  size_t n = seq.size();
  for (size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (size_t i = p; i < n && ok; ++i) ok = seq[i] == seq[i - p];
    if (ok) return p;
  }
  return n;
}

struct Candidate {
  Element conjugator;
  Element core;
  std::int64_t len;
  std::string key;
};

void consider(const GroupSpec& spec, std::optional<Candidate>& best, Element conj,
              Element core) {
  std::int64_t len = word_length(spec, conj);
  if (best && len > best->len) return;
  std::string key = to_string(spec, conj);
  if (best && len == best->len &&
      std::pair(key.size(), std::string_view(key)) >=
          std::pair(best->key.size(), std::string_view(best->key)))
    return;
  best = Candidate{std::move(conj), std::move(core), len, std::move(key)};
}

}  // namespace

CyclicReduction cyclic_reduce(const GroupSpec& spec, const Element& g) {
  if (g.is_identity()) return {};
  GreedyReduction greedy = greedy_reduce(spec, g);
  const Element& core = greedy.core;
  const Element& c0 = greedy.conjugator;

  if (core.size() == 1) {
    const auto& s = core.syllables.front();
    const auto& f = factor_of(spec, s.factor);
    if (f.kind != FactorKind::Free) {
      // Conjugators into an abelian or cyclic factor form the coset
      // c0 * Factor; the stripped prefix is the unique minimum.
      return {core, c0};
    }
    // Lone free-factor syllable: minimize over cyclic shifts of the word and
    // powers of its root.
    const auto& v = std::get<FreeWord>(s.payload);
    size_t p = smallest_period(v);
    FreeWord rho(v.begin(), v.begin() + p);
    std::int64_t window = (2 * word_length(spec, c0) + 2 * static_cast<std::int64_t>(v.size())) /
                              static_cast<std::int64_t>(p) +
                          2;
    std::optional<Candidate> best;
    for (size_t shift = 0; shift < v.size(); ++shift) {
      FreeWord rotated(v.begin() + shift, v.end());
      rotated.insert(rotated.end(), v.begin(), v.begin() + shift);
      Element rot_core{{free_syllable(s.factor, rotated)}};
      FreeWord rot_rho(rotated.begin(), rotated.begin() + p);
      for (std::int64_t t = -window; t <= window; ++t) {
        FreeWord tail(v.begin(), v.begin() + shift);
        for (std::int64_t i = 0, n = std::abs(t); i < n; ++i) {
          if (t > 0)
            tail.insert(tail.end(), rot_rho.begin(), rot_rho.end());
          else
            for (auto it = rot_rho.rbegin(); it != rot_rho.rend(); ++it)
              tail.push_back(-*it);
        }
        free_reduce(tail);
        Element cand = multiply(spec, c0, Element{{free_syllable(s.factor, tail)}});
        consider(spec, best, std::move(cand), rot_core);
      }
    }
    return {best->core, best->conjugator};
  }

  // Two or more syllables: minimize over syllable rotations and powers of
  // the rotated root block.
  const auto& sylls = core.syllables;
  size_t m = sylls.size();
  size_t p = smallest_period(sylls);
  std::int64_t root_len = 0;
  for (size_t i = 0; i < p; ++i) root_len += payload_length(factor_of(spec, sylls[i].factor), sylls[i]);
  std::int64_t window =
      (2 * word_length(spec, c0) + 2 * word_length(spec, core)) / std::max<std::int64_t>(root_len, 1) + 2;
  std::optional<Candidate> best;
  for (size_t shift = 0; shift < m; ++shift) {
    Element rot_core;
    rot_core.syllables.assign(sylls.begin() + shift, sylls.end());
    rot_core.syllables.insert(rot_core.syllables.end(), sylls.begin(), sylls.begin() + shift);
    Element rot_root;
    rot_root.syllables.assign(rot_core.syllables.begin(), rot_core.syllables.begin() + p);
    Element prefix;
    prefix.syllables.assign(sylls.begin(), sylls.begin() + shift);
    Element base = multiply(spec, c0, prefix);
    for (std::int64_t t = -window; t <= window; ++t) {
      Element cand = multiply(spec, base, power(spec, rot_root, t));
      consider(spec, best, std::move(cand), rot_core);
    }
  }
  return {best->core, best->conjugator};
}

Classification classify(const GroupSpec& spec, const Element& g) {
  Classification out;
  if (g.is_identity()) {
    out.tag = ElementClass::Identity;
    out.finite_order = 1;
    return out;
  }
  GreedyReduction greedy = greedy_reduce(spec, g);
  if (greedy.core.size() == 1) {
    const auto& s = greedy.core.syllables.front();
    const auto& f = factor_of(spec, s.factor);
    if (f.kind == FactorKind::FiniteCyclic) {
      Residue r = std::get<Residue>(s.payload);
      out.finite_order = f.param / std::gcd(f.param, r);
    }
    if (f.peripheral) {
      out.tag = ElementClass::Parabolic;
      out.peripheral = s.factor;
      return out;
    }
  }
  out.tag = ElementClass::Hyperbolic;
  return out;
}

RootPower primitive_root(const GroupSpec& spec, const Element& g) {
  Classification cls = classify(spec, g);
  if (cls.tag != ElementClass::Hyperbolic)
    throw std::invalid_argument("primitive_root requires a hyperbolic element");
  if (cls.finite_order)
    throw std::invalid_argument("primitive_root requires an infinite-order element");

  CyclicReduction red = cyclic_reduce(spec, g);
  const Element& core = red.core;
  Element local;
  std::int64_t exponent = 1;
  if (core.size() == 1) {
    const auto& s = core.syllables.front();
    const auto& f = factor_of(spec, s.factor);
    if (f.kind == FactorKind::Free) {
      const auto& w = std::get<FreeWord>(s.payload);
      size_t p = smallest_period(w);
      local = Element{{free_syllable(s.factor, FreeWord(w.begin(), w.begin() + p))}};
      exponent = static_cast<std::int64_t>(w.size() / p);
    } else {
      // free-abelian syllable in a non-peripheral factor
      const auto& v = std::get<AbelianVec>(s.payload);
      std::int64_t gcd = 0;
      for (auto x : v) gcd = std::gcd(gcd, std::abs(x));
      AbelianVec root_vec(v.size());
      for (size_t i = 0; i < v.size(); ++i) root_vec[i] = v[i] / gcd;
      local = Element{{abelian_syllable(s.factor, std::move(root_vec))}};
      exponent = gcd;
    }
  } else {
    size_t p = smallest_period(core.syllables);
    local.syllables.assign(core.syllables.begin(), core.syllables.begin() + p);
    exponent = static_cast<std::int64_t>(core.syllables.size() / p);
  }
  Element root = multiply(spec, multiply(spec, red.conjugator, local),
                          inverse(spec, red.conjugator));
  return {std::move(root), exponent};
}

CentralizerDescriptor centralizer_descriptor(const GroupSpec& spec, const Element& g) {
  CentralizerDescriptor out;
  if (g.is_identity()) {
    out.kind = CentralizerDescriptor::Kind::WholeGroup;
    return out;
  }
  CyclicReduction red = cyclic_reduce(spec, g);
  const Element& core = red.core;
  out.conjugator = red.conjugator;
  if (core.size() == 1) {
    const auto& s = core.syllables.front();
    const auto& f = factor_of(spec, s.factor);
    if (f.kind != FactorKind::Free) {
      out.kind = CentralizerDescriptor::Kind::ConjugatedFactor;
      out.factor = s.factor;
      return out;
    }
    const auto& w = std::get<FreeWord>(s.payload);
    size_t p = smallest_period(w);
    out.kind = CentralizerDescriptor::Kind::ConjugateCyclic;
    out.root = Element{{free_syllable(s.factor, FreeWord(w.begin(), w.begin() + p))}};
    return out;
  }
  size_t p = smallest_period(core.syllables);
  out.kind = CentralizerDescriptor::Kind::ConjugateCyclic;
  out.root.syllables.assign(core.syllables.begin(), core.syllables.begin() + p);
  return out;
}

bool centralizer_contains(const GroupSpec& spec, const CentralizerDescriptor& d,
                          const Element& x) {
  if (d.kind == CentralizerDescriptor::Kind::WholeGroup) return true;
  Element y = multiply(spec, multiply(spec, inverse(spec, d.conjugator), x), d.conjugator);
  if (y.is_identity()) return true;
  if (d.kind == CentralizerDescriptor::Kind::ConjugatedFactor)
    return y.size() == 1 && y.syllables.front().factor == d.factor;
  if (d.root_order) {
    Element pow;
    for (std::int64_t j = 1; j < *d.root_order; ++j) {
      pow = multiply(spec, pow, d.root);
      if (pow == y) return true;
    }
    return false;
  }
  std::int64_t target = word_length(spec, y);
  for (int dir : {1, -1}) {
    Element step = dir > 0 ? d.root : inverse(spec, d.root);
    Element pow;
    while (true) {
      pow = multiply(spec, pow, step);
      if (pow == y) return true;
      if (word_length(spec, pow) > target) break;
    }
  }
  return false;
}

// --- serialization ---------------------------------------------------------

std::string to_string(const GroupSpec& spec, const Element& g) {
  if (g.is_identity()) return "e";
  std::string out;
  bool first = true;
  for (const auto& s : g.syllables) {
    const auto& f = factor_of(spec, s.factor);
    if (!first) out += "·";
    first = false;
    out += f.label;
    out += '(';
    switch (f.kind) {
      case FactorKind::FreeAbelian: {
        const auto& v = std::get<AbelianVec>(s.payload);
        for (size_t i = 0; i < v.size(); ++i) {
          if (i) out += ',';
          out += std::to_string(v[i]);
        }
        break;
      }
      case FactorKind::FiniteCyclic:
        out += std::to_string(std::get<Residue>(s.payload));
        break;
      case FactorKind::Free: {
        const auto& w = std::get<FreeWord>(s.payload);
        size_t i = 0;
        bool first_run = true;
        while (i < w.size()) {
          size_t j = i;
          while (j < w.size() && w[j] == w[i]) ++j;
          std::int64_t exp = static_cast<std::int64_t>(j - i) * (w[i] > 0 ? 1 : -1);
          if (!first_run) out += '*';
          first_run = false;
          if (f.param == 1)
            out += 't';
          else
            out += "x" + std::to_string(std::abs(w[i]));
          if (exp != 1) out += "^" + std::to_string(exp);
          i = j;
        }
        break;
      }
    }
    out += ')';
  }
  return out;
}

namespace {

std::int64_t parse_int64(std::string_view s) {
  std::int64_t v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ParseError(0, "invalid integer '" + std::string(s) + "' in element");
  return v;
}

Syllable parse_syllable(const GroupSpec& spec, std::string_view tok) {
  auto open = tok.find('(');
  if (open == std::string_view::npos || tok.back() != ')')
    throw ParseError(0, "expected label(payload), got '" + std::string(tok) + "'");
  std::string_view label = tok.substr(0, open);
  std::string_view body = tok.substr(open + 1, tok.size() - open - 2);
  int fi = spec.factor_by_label(label);
  if (fi < 0) throw ParseError(0, "unknown factor label '" + std::string(label) + "'");
  const auto& f = spec.factors[fi];
  switch (f.kind) {
    case FactorKind::FreeAbelian: {
      AbelianVec v;
      size_t pos = 0;
      while (pos <= body.size()) {
        auto comma = body.find(',', pos);
        std::string_view part =
            comma == std::string_view::npos ? body.substr(pos) : body.substr(pos, comma - pos);
        v.push_back(parse_int64(part));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
      }
      if (static_cast<long>(v.size()) != f.param)
        throw ParseError(0, "abelian payload needs " + std::to_string(f.param) + " entries");
      return abelian_syllable(fi, std::move(v));
    }
    case FactorKind::FiniteCyclic:
      return cyclic_syllable(fi, parse_int64(body));
    case FactorKind::Free: {
      FreeWord w;
      size_t pos = 0;
      while (pos <= body.size()) {
        auto star = body.find('*', pos);
        std::string_view run =
            star == std::string_view::npos ? body.substr(pos) : body.substr(pos, star - pos);
        auto caret = run.find('^');
        std::string_view name = caret == std::string_view::npos ? run : run.substr(0, caret);
        std::int64_t exp =
            caret == std::string_view::npos ? 1 : parse_int64(run.substr(caret + 1));
        std::int64_t idx = letter_name_index(f, name);
        if (idx == 0)
          throw ParseError(0, "unknown letter '" + std::string(name) + "' for factor " + f.label);
        std::int32_t letter = static_cast<std::int32_t>(exp >= 0 ? idx : -idx);
        for (std::int64_t i = 0, n = std::abs(exp); i < n; ++i) w.push_back(letter);
        if (star == std::string_view::npos) break;
        pos = star + 1;
      }
      return free_syllable(fi, std::move(w));
    }
  }
  throw ParseError(0, "unreachable factor kind");
}

}  // namespace

Element parse_element(const GroupSpec& spec, std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw ParseError(0, "empty element string");
  if (text == "e") return {};
  std::vector<Syllable> raw;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t next = std::string_view::npos;
    size_t sep_len = 0;
    for (size_t i = pos; i < text.size(); ++i) {
      if (text[i] == '.') {
        next = i;
        sep_len = 1;
        break;
      }
      if (static_cast<unsigned char>(text[i]) == 0xc2 && i + 1 < text.size() &&
          static_cast<unsigned char>(text[i + 1]) == 0xb7) {
        next = i;
        sep_len = 2;
        break;
      }
    }
    std::string_view tok =
        next == std::string_view::npos ? text.substr(pos) : text.substr(pos, next - pos);
    if (tok.empty()) throw ParseError(0, "empty syllable in element string");
    raw.push_back(parse_syllable(spec, tok));
    if (next == std::string_view::npos) break;
    pos = next + sep_len;
  }
  return normalize(spec, std::move(raw));
}

bool shortlex_less(const GroupSpec& spec, const Element& a, const Element& b) {
  std::string sa = to_string(spec, a);
  std::string sb = to_string(spec, b);
  if (sa.size() != sb.size()) return sa.size() < sb.size();
  return sa < sb;
}

}  // namespace relhyp
