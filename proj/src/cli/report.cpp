#include "vtx/cli/report.hpp"

#include <json.hpp>

#include <sstream>

namespace vtx {

void Report::check(const std::string& id, const std::string& anchor, const CheckCount& c) {
  Check r{id, anchor, "", c.witness, c.pass, c.fail, c.vacuous, c.uncertified};
  if (c.fail > 0) r.status = "fail";
  else if (c.pass > 0) r.status = "pass";
  else if (c.uncertified > 0) r.status = "uncertified";
  else r.status = "vacuous";
  checks_.push_back(std::move(r));
}

void Report::check(const std::string& id, const std::string& anchor, bool pass, const std::string& witness) {
  Check r{id, anchor, pass ? "pass" : "fail", pass ? "" : witness};
  (pass ? r.pass : r.fail) = 1;
  checks_.push_back(std::move(r));
}

bool Report::failed() const {
  for (const Check& c : checks_)
    if (c.status == "fail") return true;
  return false;
}

std::string Report::text(bool with_tables) const {
  std::ostringstream out;
  out << "command " << command_ << "\n";
  for (const auto& [k, v] : info_) out << k << ": " << v << "\n";
  for (const Check& c : checks_) {
    out << "[" << c.status << "] " << c.id << " (" << c.anchor << ") pass=" << c.pass << " fail=" << c.fail
        << " vacuous=" << c.vacuous << " uncertified=" << c.uncertified << "\n";
    if (!c.witness.empty()) out << "  witness: " << c.witness << "\n";
  }
  if (with_tables)
    for (const auto& [name, rows] : tables_) {
      out << name << ":\n";
      for (const std::string& r : rows) out << "  " << r << "\n";
    }
  out << (failed() ? "result: fail" : "result: pass") << "\n";
  return out.str();
}

std::string Report::structured() const {
  // ordered_json keeps keys in insertion order.
  nlohmann::ordered_json j;
  j["command"] = command_;
  nlohmann::ordered_json info = nlohmann::ordered_json::object();
  for (const auto& [k, v] : info_) info[k] = v;
  j["info"] = info;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const Check& c : checks_)
    checks.push_back({{"check-id", c.id},
                      {"paper-anchor", c.anchor},
                      {"status", c.status},
                      {"witness", c.witness},
                      {"pass", c.pass},
                      {"fail", c.fail},
                      {"vacuous", c.vacuous},
                      {"uncertified", c.uncertified}});
  j["checks"] = checks;
  nlohmann::ordered_json tables = nlohmann::ordered_json::object();
  for (const auto& [name, rows] : tables_) tables[name] = rows;
  j["tables"] = tables;
  j["result"] = failed() ? "fail" : "pass";
  return j.dump(2) + "\n";
}

}  // namespace vtx
