#include "nilg2/registry.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace nilg2 {

namespace {

ExpectedVerdict verdictFromString(const std::string& s) {
  if (s == "exists") return ExpectedVerdict::Exists;
  if (s == "obstructed-corollary") return ExpectedVerdict::ObstructedCorollary;
  if (s == "obstructed-lemma2") return ExpectedVerdict::ObstructedLemma2;
  throw std::runtime_error("registry: unknown verdict \"" + s + "\"");
}

}  // namespace

std::vector<RegistryEntry> loadRegistry(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("registry: cannot open " + path);
  nlohmann::json j = nlohmann::json::parse(in);

  std::vector<RegistryEntry> out;
  for (const auto& e : j.at("entries")) {
    RegistryEntry r;
    r.table = e.at("table").get<std::string>();
    r.name = e.at("name").get<std::string>();
    r.diffs = e.at("diffs").get<std::string>();
    r.verbatim = e.value("verbatim", r.diffs);
    r.constraint = e.value("constraint", std::string{});
    r.editorial = e.value("editorial", std::string{});
    r.unrepaired = e.value("unrepaired", false);
    r.x = e.value("x", 0);
    r.verdict = verdictFromString(e.at("verdict").get<std::string>());
    r.algebra = parseAlgebra(r.diffs, ParseMode::Strict);
    if (r.verdict == ExpectedVerdict::ObstructedCorollary && r.x == 0)
      throw std::runtime_error("registry: " + r.name +
                               " lacks a designated central direction");
    if (r.algebra.symbolic && r.constraint.empty())
      throw std::runtime_error("registry: " + r.name +
                               " is parametric but has no constraint");
    out.push_back(std::move(r));
  }
  return out;
}

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> reg = loadRegistry(NILG2_REGISTRY_PATH);
  return reg;
}

std::vector<const RegistryEntry*> findEntries(const std::string& name) {
  std::vector<const RegistryEntry*> hits;
  for (const auto& r : registry())
    if (r.name == name) hits.push_back(&r);
  return hits;
}

namespace {

struct Constraint {
  enum Kind { Any, NotEqual, Greater, GreaterEqual, Equal } kind = Any;
  std::vector<Rat> values;  // excluded set, bound, or pinned value
};

Constraint parseConstraint(const std::string& text) {
  Constraint c;
  if (text.empty() || text == "mu in R") return c;
  auto expect = [&](const std::string& prefix) {
    return text.rfind(prefix, 0) == 0 ? text.substr(prefix.size())
                                      : std::string{};
  };
  std::string rest;
  if (!(rest = expect("mu!=")).empty()) {
    c.kind = Constraint::NotEqual;
    std::stringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, ',')) c.values.push_back(ratFromString(tok));
    return c;
  }
  if (!(rest = expect("mu>=")).empty()) {
    c.kind = Constraint::GreaterEqual;
    c.values.push_back(ratFromString(rest));
    return c;
  }
  if (!(rest = expect("mu>")).empty()) {
    c.kind = Constraint::Greater;
    c.values.push_back(ratFromString(rest));
    return c;
  }
  if (!(rest = expect("mu=")).empty()) {
    c.kind = Constraint::Equal;
    c.values.push_back(ratFromString(rest));
    return c;
  }
  throw std::runtime_error("registry: unparsable constraint \"" + text + "\"");
}

bool admits(const Constraint& c, const Rat& v) {
  switch (c.kind) {
    case Constraint::Any:
      return true;
    case Constraint::NotEqual:
      for (const auto& x : c.values)
        if (v == x) return false;
      return true;
    case Constraint::Greater:
      return v > c.values[0];
    case Constraint::GreaterEqual:
      return v >= c.values[0];
    case Constraint::Equal:
      return v == c.values[0];
  }
  return false;
}

}  // namespace

std::vector<Rat> admissibleSamples(const std::string& constraint) {
  Constraint c = parseConstraint(constraint);
  if (c.kind == Constraint::Equal) return {c.values[0]};
  static const char* pool[] = {"0", "1", "-1", "2", "-2", "1/2", "3", "3/2"};
  std::vector<Rat> out;
  for (const char* s : pool) {
    Rat v = ratFromString(s);
    if (admits(c, v)) out.push_back(v);
    if (out.size() == 3) break;
  }
  return out;
}

}  // namespace nilg2
