#include "relhyp/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace relhyp {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

long parse_long(std::string_view s, int line, const std::string& key) {
  try {
    size_t pos = 0;
    long v = std::stol(std::string(s), &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "invalid integer for " + key + ": '" + std::string(s) + "'");
  }
}

bool valid_label(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

char kind_letter(FactorKind k) {
  switch (k) {
    case FactorKind::FreeAbelian: return 'A';
    case FactorKind::FiniteCyclic: return 'C';
    case FactorKind::Free: return 'F';
  }
  return '?';
}

const char* kind_word(FactorKind k) {
  switch (k) {
    case FactorKind::FreeAbelian: return "abelian";
    case FactorKind::FiniteCyclic: return "cyclic";
    case FactorKind::Free: return "free";
  }
  return "?";
}

const char* param_key(FactorKind k) {
  return k == FactorKind::FiniteCyclic ? "order" : "rank";
}

}  // namespace

std::vector<int> GroupSpec::peripheral_indices() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(factors.size()); ++i)
    if (factors[i].peripheral) out.push_back(i);
  return out;
}

int GroupSpec::factor_by_label(std::string_view label) const {
  for (int i = 0; i < static_cast<int>(factors.size()); ++i)
    if (factors[i].label == label) return i;
  return -1;
}

GroupSpec parse_group_spec(std::string_view text) {
  GroupSpec spec;
  bool saw_name = false;
  int lineno = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line{raw};
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ParseError(lineno, "expected '<key> = <value>'");
    std::string_view key = trim(line.substr(0, eq));
    std::string_view value = trim(line.substr(eq + 1));

    if (key == "name") {
      if (saw_name) throw ParseError(lineno, "duplicate name line");
      if (!spec.factors.empty()) throw ParseError(lineno, "name must precede factors");
      if (value.empty()) throw ParseError(lineno, "empty group name");
      spec.name = std::string(value);
      saw_name = true;
      continue;
    }
    if (key != "factor")
      throw ParseError(lineno, "unknown key '" + std::string(key) + "'");
    if (!saw_name) throw ParseError(lineno, "first non-comment line must be 'name = ...'");

    // factor = <kind> key=value ...
    std::istringstream fs{std::string(value)};
    std::string kind_tok;
    fs >> kind_tok;
    FactorSpec f;
    if (kind_tok == "abelian") {
      f.kind = FactorKind::FreeAbelian;
      f.peripheral = true;
    } else if (kind_tok == "cyclic") {
      f.kind = FactorKind::FiniteCyclic;
      f.peripheral = true;
    } else if (kind_tok == "free") {
      f.kind = FactorKind::Free;
      f.peripheral = false;
    } else {
      throw ParseError(lineno, "unknown factor kind '" + kind_tok + "'");
    }

    bool saw_param = false;
    std::string tok;
    while (fs >> tok) {
      auto teq = tok.find('=');
      if (teq == std::string::npos)
        throw ParseError(lineno, "expected key=value, got '" + tok + "'");
      std::string k = tok.substr(0, teq);
      std::string v = tok.substr(teq + 1);
      if (k == param_key(f.kind)) {
        f.param = parse_long(v, lineno, k);
        saw_param = true;
      } else if (k == "peripheral") {
        if (v == "yes") f.peripheral = true;
        else if (v == "no") f.peripheral = false;
        else throw ParseError(lineno, "peripheral must be yes or no");
      } else if (k == "label") {
        if (!valid_label(v)) throw ParseError(lineno, "invalid label '" + v + "'");
        f.label = v;
      } else {
        throw ParseError(lineno, "unknown factor key '" + k + "'");
      }
    }
    if (!saw_param)
      throw ParseError(lineno, std::string("missing ") + param_key(f.kind) + "=<n>");

    switch (f.kind) {
      case FactorKind::FreeAbelian:
        if (f.param < 1 || f.param > kMaxAbelianRank)
          throw ParseError(lineno, "abelian rank out of range [1," +
                                       std::to_string(kMaxAbelianRank) + "]");
        break;
      case FactorKind::FiniteCyclic:
        if (f.param < 2 || f.param > kMaxCyclicOrder)
          throw ParseError(lineno, "cyclic order out of range [2," +
                                       std::to_string(kMaxCyclicOrder) + "]");
        break;
      case FactorKind::Free:
        if (f.param < 1 || f.param > kMaxFreeRank)
          throw ParseError(lineno, "free rank out of range [1," +
                                       std::to_string(kMaxFreeRank) + "]");
        break;
    }
    spec.factors.push_back(std::move(f));
  }

  if (!saw_name) throw ParseError(lineno, "missing 'name = ...' line");
  if (spec.factors.empty()) throw ParseError(lineno, "group has no factors");

  // Auto-assign labels: first factor of a kind gets the bare letter, later
  // ones get a numeric suffix.
  for (size_t i = 0; i < spec.factors.size(); ++i) {
    if (!spec.factors[i].label.empty()) continue;
    int same_kind = 0;
    for (size_t j = 0; j < i; ++j)
      if (spec.factors[j].kind == spec.factors[i].kind) ++same_kind;
    std::string label(1, kind_letter(spec.factors[i].kind));
    if (same_kind > 0) label += std::to_string(same_kind + 1);
    spec.factors[i].label = label;
  }
  std::unordered_set<std::string> seen;
  for (size_t i = 0; i < spec.factors.size(); ++i) {
    if (!seen.insert(spec.factors[i].label).second)
      throw ParseError(0, "duplicate label '" + spec.factors[i].label + "'");
  }
  return spec;
}

GroupSpec load_group_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open group file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_spec(buf.str());
}

std::string serialize_group_spec(const GroupSpec& spec) {
  std::ostringstream out;
  out << "name = " << spec.name << "\n";
  for (const auto& f : spec.factors) {
    out << "factor = " << kind_word(f.kind) << " " << param_key(f.kind) << "=" << f.param
        << " peripheral=" << (f.peripheral ? "yes" : "no") << " label=" << f.label << "\n";
  }
  return out.str();
}

ValidationReport validate(const GroupSpec& spec) {
  ValidationReport report;
  const auto& fs = spec.factors;

  auto is_cyclic2 = [](const FactorSpec& f) {
    return f.kind == FactorKind::FiniteCyclic && f.param == 2;
  };

  if (fs.size() == 1) {
    const auto& f = fs[0];
    if (f.kind == FactorKind::FiniteCyclic)
      report.warnings.push_back("group is finite");
    else if (f.param == 1)  // Z as a free or abelian factor of rank 1
      report.warnings.push_back("group is virtually cyclic");
  } else if (fs.size() == 2 && is_cyclic2(fs[0]) && is_cyclic2(fs[1])) {
    report.warnings.push_back("group is virtually cyclic (infinite dihedral)");
  }

  auto peripheral = spec.peripheral_indices();
  if (peripheral.empty())
    report.warnings.push_back("no peripheral factors; the parabolic set is empty");
  if (fs.size() == 1 && !peripheral.empty())
    report.warnings.push_back("peripheral factor equals the whole group");

  return report;
}

}  // namespace relhyp
