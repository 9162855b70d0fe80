#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "cm/verify.hpp"

namespace cm::verify {

namespace {

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", s);
  return buf;
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream os;
  const Config& c = r.config;
  os << "suite " << r.suite << "  dim=" << c.dim << " max-tail=" << c.max_tail << " max-degree=" << c.max_degree
     << " seed=" << c.seed << "\n";
  std::size_t ok = 0;
  for (const auto& it : r.items) {
    ok += it.passed;
    os << (it.passed ? "PASS  " : "FAIL  ") << it.name << "  (" << seconds(it.seconds) << ")\n";
    if (!it.passed && !it.detail.empty()) os << "      first failure: " << it.detail << "\n";
  }
  os << (r.passed() ? "PASS  " : "FAIL  ") << ok << "/" << r.items.size() << " checks  (" << seconds(r.seconds)
     << ")\n";
  return os.str();
}

std::string render_json(const Report& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["config"] = {{"dim", r.config.dim},
                 {"max_tail", r.config.max_tail},
                 {"max_degree", r.config.max_degree},
                 {"seed", r.config.seed}};
  j["items"] = nlohmann::ordered_json::array();
  for (const auto& it : r.items) {
    nlohmann::ordered_json e = {{"name", it.name}, {"status", it.passed ? "PASS" : "FAIL"}, {"seconds", it.seconds}};
    if (!it.passed) e["detail"] = it.detail;
    j["items"].push_back(e);
  }
  j["passed"] = r.passed();
  j["seconds"] = r.seconds;
  return j.dump(2);
}

}  // namespace cm::verify
