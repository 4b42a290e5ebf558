#include "wordmaps/report.hpp"

#include <cstdio>
#include <sstream>

namespace wordmaps {

namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 14695981039346656037ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Json bounds_json(const VerifyBounds& b) {
  Json j;
  j["max_order"] = b.max_order;
  j["max_len"] = b.max_len;
  j["rank"] = b.rank;
  j["theta_samples"] = b.theta_samples;
  j["gamma_samples"] = b.gamma_samples;
  j["theta_length"] = b.theta_length;
  j["seed"] = b.seed;
  j["budget"] = b.budget;
  j["auto_cap"] = b.auto_cap;
  j["groups"] = b.groups;
  return j;
}

std::string verdict(const std::optional<bool>& v, const char* yes, const char* no) {
  return v ? (*v ? yes : no) : "-";
}

}  // namespace

Json to_json(const ChiralityReport& r, bool with_counts) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "chirality";
  j["group"] = {{"name", r.group_name}, {"order", r.group_order}};
  j["word"] = r.word;
  j["arity"] = r.arity;
  j["members"] = r.members;
  if (with_counts) j["counts"] = r.counts;
  j["chiral"] = optional_json(r.chiral);
  j["chiral_witness"] = optional_json(r.chiral_witness);
  j["weakly_chiral"] = optional_json(r.weakly_chiral);
  j["weak_witness"] = optional_json(r.weak_witness);
  auto gammas = Json::array();
  for (const auto& v : r.gammas) {
    Json g;
    g["gamma"] = v.gamma;
    g["chiral"] = optional_json(v.chiral);
    g["witness"] = optional_json(v.witness);
    g["weakly_chiral"] = optional_json(v.weakly_chiral);
    g["weak_witness"] = optional_json(v.weak_witness);
    gammas.push_back(std::move(g));
  }
  j["gammas"] = std::move(gammas);
  j["all_gamma_agree"] = optional_json(r.all_gamma_agree);
  j["evaluations"] = r.evaluations;
  j["wall_ms"] = r.wall_ms;
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "verification";
  j["suite"] = r.suite;
  j["bounds"] = bounds_json(r.bounds);
  j["passed"] = r.passed();
  j["cases"] = r.cases;
  j["checks"] = r.checks;
  auto failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"suite", f.suite},
                        {"check", f.check},
                        {"group", f.group},
                        {"word", f.word},
                        {"arity", f.arity},
                        {"map", f.map},
                        {"detail", f.detail}});
  }
  j["failures"] = std::move(failures);
  j["failures_dropped"] = r.failures_dropped;
  auto skipped = Json::array();
  for (const auto& s : r.skipped) {
    skipped.push_back({{"suite", s.suite}, {"group", s.group}, {"word", s.word}, {"reason", s.reason}});
  }
  j["skipped"] = std::move(skipped);
  auto parts = Json::array();
  for (const auto& p : r.parts) parts.push_back(to_json(p));
  j["parts"] = std::move(parts);
  j["wall_ms"] = r.wall_ms;
  return j;
}

Json to_json(const Finding& f) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "finding";
  j["group"] = f.group;
  j["word"] = f.word;
  j["arity"] = f.arity;
  j["chiral"] = f.chiral;
  j["weakly_chiral"] = f.weakly_chiral;
  j["gamma_agree"] = optional_json(f.gamma_agree);
  j["chiral_witness"] = optional_json(f.chiral_witness);
  j["weak_witness"] = optional_json(f.weak_witness);
  j["image_size"] = f.image_size;
  j["evaluations"] = f.evaluations;
  j["highlight"] = f.highlight();
  j["skipped"] = optional_json(f.skipped);
  return j;
}

Json to_json(const FiniteGroup& g, bool with_table) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "group";
  j["name"] = g.name();
  j["order"] = g.order();
  j["abelian"] = is_abelian(g);
  j["labels"] = g.labels();
  j["element_orders"] = element_orders(g);
  if (with_table) {
    auto rows = Json::array();
    for (Element a = 0; a < g.order(); ++a) {
      auto row = g.row(a);
      rows.push_back(std::vector<Element>(row.begin(), row.end()));
    }
    j["table"] = std::move(rows);
  }
  return j;
}

Finding finding_from_json(const Json& j) {
  try {
    if (!j.is_object() || j.value("kind", "") != "finding") throw ParseError("record is not a finding");
    Finding f;
    f.group = j.at("group").get<std::string>();
    f.word = j.at("word").get<std::string>();
    f.arity = j.at("arity").get<int>();
    f.chiral = j.at("chiral").get<bool>();
    f.weakly_chiral = j.at("weakly_chiral").get<bool>();
    if (!j.at("gamma_agree").is_null()) f.gamma_agree = j.at("gamma_agree").get<bool>();
    if (!j.at("chiral_witness").is_null()) f.chiral_witness = j.at("chiral_witness").get<Element>();
    if (!j.at("weak_witness").is_null()) f.weak_witness = j.at("weak_witness").get<Element>();
    f.image_size = j.at("image_size").get<std::size_t>();
    f.evaluations = j.at("evaluations").get<std::uint64_t>();
    if (j.contains("skipped") && !j.at("skipped").is_null()) f.skipped = j.at("skipped").get<std::string>();
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed finding record: ") + e.what());
  }
}

Finding parse_finding(const std::string& line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed finding record: ") + e.what());
  }
  return finding_from_json(j);
}

Json strip_timing(const Json& j) {
  if (j.is_object()) {
    Json out = Json::object();
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() == "wall_ms") continue;
      out[it.key()] = strip_timing(it.value());
    }
    return out;
  }
  if (j.is_array()) {
    Json out = Json::array();
    for (const auto& v : j) out.push_back(strip_timing(v));
    return out;
  }
  return j;
}

std::string stable_digest(const Json& j) { return hex64(fnv1a(strip_timing(j).dump())); }

std::string stable_digest_of_lines(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    h = fnv1a(strip_timing(Json::parse(line)).dump() + "\n", h);
  }
  return hex64(h);
}

std::string render_human(const ChiralityReport& r, const FiniteGroup& g, bool with_counts) {
  std::ostringstream os;
  os << "group " << r.group_name << " (order " << r.group_order << ")\n";
  os << "word  " << r.word << "  arity " << r.arity << "\n";
  os << "image (" << r.members.size() << "):";
  for (Element x : r.members) os << ' ' << x << '[' << g.label(x) << ']';
  os << '\n';
  if (with_counts) {
    os << "fibers:";
    for (std::size_t x = 0; x < r.counts.size(); ++x) os << ' ' << r.counts[x];
    os << '\n';
  }
  if (r.chiral) {
    os << "chiral: " << verdict(r.chiral, "yes", "no");
    if (r.chiral_witness) os << "  (witness " << *r.chiral_witness << '[' << g.label(*r.chiral_witness) << "])";
    os << '\n';
  }
  if (r.weakly_chiral) {
    os << "weakly chiral: " << verdict(r.weakly_chiral, "yes", "no");
    if (r.weak_witness) os << "  (witness " << *r.weak_witness << '[' << g.label(*r.weak_witness) << "])";
    os << '\n';
  }
  if (!r.gammas.empty()) {
    os << "gammas checked: " << r.gammas.size() << '\n';
    for (const auto& v : r.gammas) {
      os << "  " << v.gamma << ": chiral " << verdict(v.chiral, "yes", "no") << ", weak "
         << verdict(v.weakly_chiral, "yes", "no") << '\n';
    }
  }
  if (r.all_gamma_agree) os << "all gamma agree: " << (*r.all_gamma_agree ? "true" : "false") << '\n';
  os << "evaluations " << r.evaluations << ", " << r.wall_ms << " ms\n";
  return os.str();
}

std::string render_human(const VerificationReport& r) {
  std::ostringstream os;
  os << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << "  cases " << r.cases << ", checks " << r.checks
     << ", failures " << r.failures.size() + r.failures_dropped << ", skipped " << r.skipped.size() << ", "
     << r.wall_ms << " ms\n";
  for (const auto& p : r.parts) os << "  " << render_human(p);
  if (r.parts.empty()) {
    for (const auto& f : r.failures) {
      os << "  FAIL [" << f.check << "] group " << f.group << " word " << f.word << " map " << f.map << ": "
         << f.detail << '\n';
    }
    for (const auto& s : r.skipped) os << "  skip group " << s.group << " word " << s.word << ": " << s.reason << '\n';
  }
  return os.str();
}

}  // namespace wordmaps
